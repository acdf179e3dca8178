#pragma once

#include <map>
#include <string>

#include "bilat/deduction.hpp"

namespace bilat {

enum class ViolationKind {
  Arity,
  Schema,
  AbsurdityAsHypothesis,
  InconsistentAssumptionClass,
  DischargeScope,
  RuleOutsideSystem,
  Restriction,
};

const char* violationKindToken(ViolationKind k);

struct Violation {
  Path position;
  ViolationKind kind;
  RuleName rule;
  std::string message;
};

struct CheckReport {
  bool ok = true;
  std::vector<Violation> violations;
};

// Validates rule schemas, arities, assumption-class consistency, discharge
// scoping, and system membership. Reports every violation found, in preorder.
CheckReport check(const Deduction& d, const SystemConfig& cfg);

struct AssumptionInfo {
  SignedFormula formula;
  int occurrences = 0;
};

// Open assumption classes of a deduction that passes check.
std::map<unsigned, AssumptionInfo> openAssumptions(const Deduction& d);
std::set<SignedFormula> openSignedFormulas(const Deduction& d);

// Replaces every open hypothesis of class cls with a copy of replacement,
// whose conclusion must equal the class formula. Every label inside each
// inserted copy is refreshed to a globally new label, one set per copy.
// Throws std::invalid_argument if cls is discharged in d or the conclusion
// does not match; zero occurrences leave d unchanged.
Deduction substituteHypotheses(const Deduction& d, unsigned cls,
                               const Deduction& replacement);

}  // namespace bilat
