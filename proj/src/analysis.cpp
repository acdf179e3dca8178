#include "bilat/analysis.hpp"

#include <algorithm>
#include <set>

#include "bilat/check.hpp"

namespace bilat {

const char* redexKindToken(RedexKind k) {
  switch (k) {
    case RedexKind::Perm: return "perm";
    case RedexKind::IE: return "ie";
    case RedexKind::RE: return "re";
    case RedexKind::RNC: return "rnc";
    case RedexKind::INC: return "inc";
    case RedexKind::Simp: return "simp";
  }
  return "";
}

namespace {

bool isCaseSplit(RuleName r) {
  return r == RuleName::PosOrE || r == RuleName::NegAndE;
}

// Rules whose conclusion carries content into a non-contradiction premise:
// the left premise being one of these raises the effective degree of the
// right premise by one.
bool activeForBump(RuleName r) {
  return isIntro(r) || r == RuleName::Red || isCaseSplit(r);
}

struct FlatNode {
  const Deduction* node;
  Path path;
  int parent;      // index into the flat vector, -1 at the root
  int childIndex;  // position among the parent's premises
};

struct TreeIndex {
  std::vector<FlatNode> nodes;  // preorder

  explicit TreeIndex(const Deduction& root) {
    Path path;
    build(root, path, -1, 0);
  }

  void build(const Deduction& d, Path& path, int parent, int childIndex) {
    int self = static_cast<int>(nodes.size());
    nodes.push_back({&d, path, parent, childIndex});
    for (int i = 0; i < static_cast<int>(d.premises.size()); ++i) {
      path.push_back(i);
      build(d.premises[i], path, self, i);
      path.pop_back();
    }
  }

  bool bumped(int i) const {
    const FlatNode& n = nodes[i];
    if (n.parent < 0) return false;
    const FlatNode& p = nodes[n.parent];
    return p.node->rule == RuleName::Nc && n.childIndex == 1 &&
           activeForBump(p.node->premises[0].rule);
  }
};

std::vector<Segment> segmentsOf(const TreeIndex& idx) {
  std::vector<Segment> out;
  for (std::size_t i = 0; i < idx.nodes.size(); ++i) {
    const FlatNode& n = idx.nodes[i];
    if (n.parent < 0 || n.childIndex < 1) continue;
    if (!isCaseSplit(idx.nodes[n.parent].node->rule)) continue;
    if (isCaseSplit(n.node->rule)) continue;  // mid-chain, not a topmost occurrence

    Segment seg;
    seg.formula = n.node->conclusion;
    seg.positions.push_back(n.path);
    int cur = n.parent;
    while (true) {
      seg.positions.push_back(idx.nodes[cur].path);
      const FlatNode& c = idx.nodes[cur];
      if (c.parent >= 0 && c.childIndex >= 1 &&
          isCaseSplit(idx.nodes[c.parent].node->rule)) {
        cur = c.parent;
      } else {
        break;
      }
    }

    const FlatNode& last = idx.nodes[cur];
    seg.maximal = false;
    if (last.parent >= 0 && seg.formula.isSigned()) {
      RuleName consumer = idx.nodes[last.parent].node->rule;
      if ((isElim(consumer) && last.childIndex == 0) || consumer == RuleName::Nc)
        seg.maximal = true;
    }
    seg.effectiveDegree = seg.formula.degree() + (idx.bumped(cur) ? 1 : 0);
    out.push_back(std::move(seg));
  }
  return out;
}

std::vector<MaximalFormula> maximalOf(const TreeIndex& idx) {
  std::vector<MaximalFormula> out;
  for (std::size_t i = 0; i < idx.nodes.size(); ++i) {
    const FlatNode& n = idx.nodes[i];
    if (n.parent < 0) continue;
    const FlatNode& p = idx.nodes[n.parent];
    RuleName X = n.node->rule;
    RuleName P = p.node->rule;

    std::optional<RedexKind> kind;
    if (isElim(P) && n.childIndex == 0) {
      if (isIntro(X)) kind = RedexKind::IE;
      else if (X == RuleName::Red) kind = RedexKind::RE;
    } else if (P == RuleName::Nc) {
      if (X == RuleName::Red) {
        kind = RedexKind::RNC;
      } else if (isIntro(X) &&
                 isIntro(p.node->premises[1 - n.childIndex].rule)) {
        kind = RedexKind::INC;
      }
    }
    if (!kind) continue;

    MaximalFormula m;
    m.kind = *kind;
    m.position = n.path;
    m.formula = n.node->conclusion.signedFormula();
    m.effectiveDegree = m.formula.degree() + (idx.bumped(static_cast<int>(i)) ? 1 : 0);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

std::vector<Segment> segments(const Deduction& d) {
  TreeIndex idx(d);
  return segmentsOf(idx);
}

std::vector<MaximalFormula> maximalOccurrences(const Deduction& d) {
  TreeIndex idx(d);
  return maximalOf(idx);
}

Rank rank(const Deduction& d) {
  TreeIndex idx(d);
  std::vector<MaximalFormula> occs = maximalOf(idx);
  std::vector<Segment> segs = segmentsOf(idx);

  std::set<Path> onMaximalSegment;
  for (const Segment& s : segs)
    if (s.maximal)
      for (const Path& p : s.positions) onMaximalSegment.insert(p);

  Rank r;
  auto feed = [&](int degree, int weight) {
    if (r.zero || degree > r.degree) {
      r.zero = false;
      r.degree = degree;
      r.count = weight;
    } else if (degree == r.degree) {
      r.count += weight;
    }
  };
  for (const MaximalFormula& m : occs)
    if (!onMaximalSegment.count(m.position)) feed(m.effectiveDegree, 1);
  for (const Segment& s : segs)
    if (s.maximal) feed(s.effectiveDegree, s.length());
  return r;
}

bool isNormal(const Deduction& d) {
  if (!maximalOccurrences(d).empty()) return false;
  for (const Segment& s : segments(d))
    if (s.maximal) return false;
  return true;
}

std::vector<SubformulaViolation> subformulaReport(const Deduction& d) {
  std::set<Formula> allowed;
  auto admit = [&](const Formula& f) {
    for (const Formula& sub : subformulas(f)) allowed.insert(sub);
  };
  if (d.conclusion.isSigned()) admit(d.conclusion.body());
  for (const auto& [label, info] : openAssumptions(d)) admit(info.formula.body);

  std::vector<SubformulaViolation> out;
  forEachNode(d, [&](const Deduction& n, const Path& path) {
    if (!n.conclusion.isSigned()) return;
    if (!allowed.count(n.conclusion.body()))
      out.push_back({path, n.conclusion.signedFormula()});
  });
  return out;
}

}  // namespace bilat
