#pragma once

#include <functional>
#include <vector>

#include "bilat/rules.hpp"

namespace bilat {

// Value-semantic deduction tree. Hypotheses carry an assumption-class label;
// inference nodes carry the discharge list for their rule, positionally
// aligned with dischargePremise.
struct Deduction {
  RuleName rule = RuleName::Hyp;
  Conclusion conclusion;
  unsigned label = 0;                // Hyp only
  std::vector<unsigned> discharged;  // inference nodes only
  std::vector<Deduction> premises;

  static Deduction hyp(unsigned label, SignedFormula sf);
  static Deduction infer(RuleName rule, Conclusion conclusion,
                         std::vector<unsigned> discharged,
                         std::vector<Deduction> premises);

  friend bool operator==(const Deduction& a, const Deduction& b);
  friend bool operator!=(const Deduction& a, const Deduction& b) { return !(a == b); }
};

// Child indices from the root; {} addresses the root.
using Path = std::vector<int>;

const Deduction* at(const Deduction& d, const Path& path);
Deduction* at(Deduction& d, const Path& path);

int nodeCount(const Deduction& d);
unsigned maxLabel(const Deduction& d);

// Preorder walk, premises left to right.
void forEachNode(const Deduction& d,
                 const std::function<void(const Deduction&, const Path&)>& fn);

// Structural equality up to a consistent global renaming of class labels.
bool isomorphic(const Deduction& a, const Deduction& b);

}  // namespace bilat
