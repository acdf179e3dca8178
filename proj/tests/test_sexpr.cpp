#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bilat/sexpr.hpp"

using namespace bilat;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("printing then parsing is the identity on every corpus file") {
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(CORPUS_DIR)) {
    if (entry.path().extension() != ".bnd") continue;
    ++seen;
    Deduction d = parseDeduction(slurp(entry.path()));
    std::string once = print(d);
    Deduction reparsed = parseDeduction(once);
    CHECK(reparsed == d);
    CHECK(print(reparsed) == once);
  }
  CHECK(seen == 19);
}

TEST_CASE("canonical output is single-line with positional discharge lists") {
  Deduction d = parseDeduction(
      "; comment\n(+impI   (+ (imp A A))\n  (1)\n  (hyp 1 (+ A)))");
  CHECK(print(d) == "(+impI (+ (imp A A)) (1) (hyp 1 (+ A)))");
}

TEST_CASE("paths print in bracket form") {
  CHECK(print(Path{}) == "[]");
  CHECK(print(Path{0, 1}) == "[0,1]");
}

TEST_CASE("shape errors carry byte spans") {
  CHECK_THROWS_AS(parseDeduction("(hyp 1 (+ A)"), ParseError);
  CHECK_THROWS_AS(parseDeduction("(hyp x (+ A))"), ParseError);
  CHECK_THROWS_AS(parseDeduction("(frob (+ A) ())"), ParseError);
  CHECK_THROWS_AS(parseDeduction("(hyp 1 (+ A)) trailing"), ParseError);
  CHECK_THROWS_AS(parseDeduction(""), ParseError);
  CHECK_THROWS_AS(parseFormula("(and A)"), ParseError);
  try {
    parseDeduction("(hyp 1 (* A))");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.span.start > 0);
    CHECK(e.span.end >= e.span.start);
  }
}

TEST_CASE("a hypothesis of incoherence parses; rejecting it is the checker's job") {
  Deduction d = parseDeduction("(hyp 1 bot)");
  CHECK(d.rule == RuleName::Hyp);
  CHECK(d.conclusion.isAbsurdity());
}
