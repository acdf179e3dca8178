#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "bilat/deduction.hpp"

namespace bilat {

// Byte offsets into the parsed text, start <= end.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

struct ParseError : std::runtime_error {
  ParseError(SourceSpan span, const std::string& message)
      : std::runtime_error(message), span(span) {}
  SourceSpan span;
};

// Parses the s-expression deduction format. Shape errors only; rule schema
// violations are left to check.
Deduction parseDeduction(const std::string& text);

Formula parseFormula(const std::string& text);

// Canonical single-line form; parse(print(d)) == d.
std::string print(const Deduction& d);
std::string print(const Formula& f);
std::string print(const SignedFormula& sf);
std::string print(const Conclusion& c);
std::string print(const Path& p);

}  // namespace bilat
