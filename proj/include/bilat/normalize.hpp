#pragma once

#include <stdexcept>
#include <string>

#include "bilat/analysis.hpp"
#include "bilat/check.hpp"

namespace bilat {

// Breach of an internal invariant (rank failed to decrease, no redex
// selectable, rewrite produced an ill-formed tree).
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Raised by atomizeNC on connectives it has no expansion for.
struct UnsupportedConnective : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StepRecord {
  int index = 0;
  RedexKind kind = RedexKind::IE;
  std::string subcase;
  Path position;
  Rank rankBefore;
  Rank rankAfter;
};

enum class Outcome { Normal, Stuck, StepLimit };

struct StuckRedex {
  RedexKind kind;
  Conn connective;
  Path position;
};

struct Trace {
  Outcome outcome = Outcome::Normal;
  std::vector<StepRecord> steps;
  std::vector<StuckRedex> stuckRedexes;
};

struct NormalizeResult {
  Deduction deduction;
  Trace trace;
};

// Highest-effective-degree redex that is safe to fire: nothing of that degree
// above it, inside a sibling premise subtree of its consumer, or on a segment
// through the consumer's minor premises. Among survivors, the rightmost.
// Empty only when the deduction is normal.
std::optional<Redex> selectRedex(const Deduction& d);

// Single rewrite operations. Each returns the whole rewritten deduction and
// allocates fresh class labels above maxLabel(d).
Deduction applyPermutative(const Deduction& d, const Redex& r);
Deduction reduceIE(const Deduction& d, const Redex& r);
Deduction reduceRE(const Deduction& d, const Redex& r);
Deduction reduceRNC(const Deduction& d, const Redex& r);
Deduction reduceINC(const Deduction& d, const Redex& r);

// Removes case-split applications where a minor premise ignores its
// discharge class, replacing them by that minor premise. When both minors
// qualify the first is kept. Run to fixpoint.
Deduction simplify(const Deduction& d);

// Repeatedly selects and fires redexes until none remain, the selected redex
// has no reduction, or maxSteps is exhausted. Requires check(d, cfg).ok.
NormalizeResult normalize(const Deduction& d, const SystemConfig& cfg,
                          int maxSteps = 100000);

// Rewrites every non-contradiction application to ones on atomic formulas
// only. Defined for and, or, imp, not; throws UnsupportedConnective otherwise.
Deduction atomizeNC(const Deduction& d);

}  // namespace bilat
