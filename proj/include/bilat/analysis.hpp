#pragma once

#include <optional>

#include "bilat/deduction.hpp"

namespace bilat {

enum class RedexKind { Perm, IE, RE, RNC, INC, Simp };

const char* redexKindToken(RedexKind k);

// A maximal formula occurrence: the conclusion of the node at `position`,
// classified by how it is produced and consumed.
//   IE  introduction conclusion, major premise of an elimination
//   RE  reductio conclusion, major premise of an elimination
//   RNC reductio conclusion, premise of non-contradiction
//   INC introduction conclusion, premise of non-contradiction whose other
//       premise is also an introduction conclusion
struct MaximalFormula {
  RedexKind kind;
  Path position;
  SignedFormula formula;
  int effectiveDegree = 0;
};

// A repeated conclusion threaded through case-split minor premises.
// positions lists the occurrence nodes from topmost to bottommost.
struct Segment {
  std::vector<Path> positions;
  Conclusion formula;
  bool maximal = false;
  int effectiveDegree = 0;

  int length() const { return static_cast<int>(positions.size()); }
  const Path& top() const { return positions.front(); }
  const Path& bottom() const { return positions.back(); }
};

std::vector<Segment> segments(const Deduction& d);
std::vector<MaximalFormula> maximalOccurrences(const Deduction& d);

struct Rank {
  bool zero = true;
  int degree = 0;
  int count = 0;

  friend bool operator==(const Rank& a, const Rank& b) {
    if (a.zero != b.zero) return false;
    return a.zero || (a.degree == b.degree && a.count == b.count);
  }
  friend bool operator!=(const Rank& a, const Rank& b) { return !(a == b); }
  friend bool operator<(const Rank& a, const Rank& b) {
    if (a.zero) return !b.zero;
    if (b.zero) return false;
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.count < b.count;
  }
};

// degree: the highest effective degree among maximal formula occurrences and
// maximal segments. count: occurrences at that degree, segments weighted by
// length. zero when the deduction is normal.
Rank rank(const Deduction& d);

bool isNormal(const Deduction& d);

struct SubformulaViolation {
  Path position;
  SignedFormula formula;
};

// Occurrences whose body is not a subformula of the conclusion body or of
// any open assumption body. Absurdity occurrences are exempt.
std::vector<SubformulaViolation> subformulaReport(const Deduction& d);

// Selected rewrite site. For Perm the segment is present and position is its
// bottom occurrence; otherwise formula is present and position addresses the
// occurrence node itself.
struct Redex {
  RedexKind kind = RedexKind::IE;
  Path position;
  int effectiveDegree = 0;
  std::optional<SignedFormula> formula;
  std::optional<Segment> segment;
};

}  // namespace bilat
