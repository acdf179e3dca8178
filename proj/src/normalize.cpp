#include "bilat/normalize.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace bilat {

namespace {

bool isCaseSplit(RuleName r) {
  return r == RuleName::PosOrE || r == RuleName::NegAndE;
}

bool isPrefix(const Path& prefix, const Path& path) {
  if (prefix.size() > path.size()) return false;
  return std::equal(prefix.begin(), prefix.end(), path.begin());
}

bool isProperPrefix(const Path& prefix, const Path& path) {
  return prefix.size() < path.size() && isPrefix(prefix, path);
}

Path parentPath(const Path& p) {
  Path out = p;
  out.pop_back();
  return out;
}

const Deduction& nodeAt(const Deduction& root, const Path& p) {
  const Deduction* n = at(root, p);
  if (!n) throw InternalError("dangling path into deduction");
  return *n;
}

Deduction replaceAt(const Deduction& root, const Path& path, Deduction sub) {
  if (path.empty()) return sub;
  Deduction out = root;
  Deduction* cur = &out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    cur = &cur->premises[path[i]];
  cur->premises[path.back()] = std::move(sub);
  return out;
}

void collectBound(const Deduction& d, std::set<unsigned>& out) {
  for (unsigned c : d.discharged) out.insert(c);
  for (const Deduction& p : d.premises) collectBound(p, out);
}

Deduction relabelClasses(const Deduction& d, const std::map<unsigned, unsigned>& m) {
  Deduction out = d;
  if (out.rule == RuleName::Hyp) {
    auto it = m.find(out.label);
    if (it != m.end()) out.label = it->second;
  }
  for (unsigned& c : out.discharged) {
    auto it = m.find(c);
    if (it != m.end()) c = it->second;
  }
  for (Deduction& p : out.premises) p = relabelClasses(p, m);
  return out;
}

// Copy with the classes bound inside refreshed; open classes stay shared.
Deduction refreshBound(const Deduction& d, unsigned& next) {
  std::set<unsigned> bound;
  collectBound(d, bound);
  if (bound.empty()) return d;
  std::map<unsigned, unsigned> fresh;
  for (unsigned c : bound) fresh[c] = next++;
  return relabelClasses(d, fresh);
}

// Replace every hypothesis of cls with a fresh copy produced by make.
Deduction replaceClassHyps(const Deduction& host, unsigned cls,
                           const std::function<Deduction()>& make) {
  if (host.rule == RuleName::Hyp && host.label == cls) return make();
  Deduction out = host;
  for (Deduction& p : out.premises) p = replaceClassHyps(p, cls, make);
  return out;
}

// Substitution that keeps the replacement's open classes shared between
// copies; only its internally bound classes are refreshed per copy.
Deduction substPreserve(const Deduction& host, unsigned cls,
                        const Deduction& replacement, unsigned& next) {
  return replaceClassHyps(host, cls,
                          [&] { return refreshBound(replacement, next); });
}

int countClassHyps(const Deduction& d, unsigned cls) {
  int n = d.rule == RuleName::Hyp && d.label == cls ? 1 : 0;
  for (const Deduction& p : d.premises) n += countClassHyps(p, cls);
  return n;
}

std::map<Path, int> postorderIndex(const Deduction& root) {
  std::map<Path, int> out;
  int counter = 0;
  std::function<void(const Deduction&, Path&)> walk = [&](const Deduction& d,
                                                          Path& path) {
    for (int i = 0; i < static_cast<int>(d.premises.size()); ++i) {
      path.push_back(i);
      walk(d.premises[i], path);
      path.pop_back();
    }
    out[path] = counter++;
  };
  Path path;
  walk(root, path);
  return out;
}

const Path& lowOf(const Redex& r) { return r.position; }

const Path& highOf(const Redex& r) {
  return r.kind == RedexKind::Perm ? r.segment->top() : r.position;
}

std::vector<Redex> allRedexes(const Deduction& d) {
  std::vector<Redex> out;
  for (const MaximalFormula& m : maximalOccurrences(d)) {
    Redex r;
    r.kind = m.kind;
    r.position = m.position;
    r.effectiveDegree = m.effectiveDegree;
    r.formula = m.formula;
    out.push_back(std::move(r));
  }
  for (Segment& s : segments(d)) {
    if (!s.maximal) continue;
    Redex r;
    r.kind = RedexKind::Perm;
    r.position = s.bottom();
    r.effectiveDegree = s.effectiveDegree;
    r.segment = std::move(s);
    out.push_back(std::move(r));
  }
  return out;
}

bool irreducible(const Redex& r) {
  if (r.kind == RedexKind::IE)
    return r.formula && r.formula->body.conn() == Conn::Tonk;
  if (r.kind == RedexKind::RE) {
    Conn c = r.formula->body.conn();
    return c == Conn::Conk || c == Conn::Honk || c == Conn::Tonk;
  }
  return false;
}

// Candidates must share the top effective degree. Keeps those with no
// same-degree material above them, none inside a sibling premise subtree of
// their consumer, and no same-degree segment through the consumer's minor
// premises; of the survivors, picks the one whose bottom occurrence is
// rightmost in postorder.
std::optional<Redex> pickAmong(const Deduction& root, std::vector<Redex> cands) {
  if (cands.empty()) return std::nullopt;
  int top = 0;
  for (const Redex& r : cands) top = std::max(top, r.effectiveDegree);
  std::erase_if(cands, [&](const Redex& r) { return r.effectiveDegree < top; });

  std::vector<int> survivors;
  for (int i = 0; i < static_cast<int>(cands.size()); ++i) {
    const Redex& x = cands[i];
    Path consumer = parentPath(lowOf(x));
    const Deduction& R = nodeAt(root, consumer);

    bool blocked = false;
    for (int j = 0; !blocked && j < static_cast<int>(cands.size()); ++j) {
      if (j == i) continue;
      if (isProperPrefix(highOf(x), lowOf(cands[j]))) blocked = true;
    }

    if (!blocked && isElim(R.rule)) {
      for (int m = 1; !blocked && m < static_cast<int>(R.premises.size()); ++m) {
        Path minor = consumer;
        minor.push_back(m);
        for (int j = 0; !blocked && j < static_cast<int>(cands.size()); ++j) {
          if (j == i) continue;
          if (isPrefix(minor, lowOf(cands[j]))) blocked = true;
        }
      }
      for (int j = 0; !blocked && j < static_cast<int>(cands.size()); ++j) {
        if (j == i || cands[j].kind != RedexKind::Perm) continue;
        for (const Path& p : cands[j].segment->positions) {
          if (!p.empty() && p.back() >= 1 && parentPath(p) == consumer) {
            blocked = true;
            break;
          }
        }
      }
    }
    if (!blocked && R.rule == RuleName::Nc) {
      Path other = consumer;
      other.push_back(1 - lowOf(x).back());
      for (int j = 0; !blocked && j < static_cast<int>(cands.size()); ++j) {
        if (j == i) continue;
        if (isPrefix(other, lowOf(cands[j]))) blocked = true;
      }
    }
    if (!blocked) survivors.push_back(i);
  }
  if (survivors.empty()) return std::nullopt;

  std::map<Path, int> post = postorderIndex(root);
  int best = survivors[0];
  for (int i : survivors) {
    int a = post.at(lowOf(cands[i]));
    int b = post.at(lowOf(cands[best]));
    if (a > b || (a == b && post.at(highOf(cands[i])) > post.at(highOf(cands[best]))))
      best = i;
  }
  return cands[best];
}

std::string ieSubcase(RuleName intro, RuleName elim) {
  switch (elim) {
    case RuleName::PosAndE1: return "+and1";
    case RuleName::PosAndE2: return "+and2";
    case RuleName::NegOrE1: return "-or1";
    case RuleName::NegOrE2: return "-or2";
    case RuleName::NegImpE1: return "-imp1";
    case RuleName::NegImpE2: return "-imp2";
    case RuleName::PosImpE: return "imp";
    case RuleName::PosNotE: return "+not";
    case RuleName::NegNotE: return "-not";
    case RuleName::PosConkE1: return "+conk1";
    case RuleName::PosConkE2: return "+conk2";
    case RuleName::NegConkE1: return "-conk1";
    case RuleName::NegConkE2: return "-conk2";
    case RuleName::PosHonkE1: return "+honk1";
    case RuleName::PosHonkE2: return "+honk2";
    case RuleName::NegHonkE1: return "-honk1";
    case RuleName::NegHonkE2: return "-honk2";
    case RuleName::PosOrE:
      return intro == RuleName::PosOrI1 ? "+or1" : "+or2";
    case RuleName::NegAndE:
      return intro == RuleName::NegAndI1 ? "-and1" : "-and2";
    default:
      throw InternalError("introduction consumed by a rule with no reduction");
  }
}

}  // namespace

std::optional<Redex> selectRedex(const Deduction& d) {
  std::vector<Redex> cands = allRedexes(d);
  if (cands.empty()) return std::nullopt;
  std::optional<Redex> pick = pickAmong(d, std::move(cands));
  if (!pick) throw InternalError("no redex satisfies the selection conditions");
  return pick;
}

Deduction applyPermutative(const Deduction& d, const Redex& r) {
  if (r.kind != RedexKind::Perm || !r.segment)
    throw InternalError("permutation applied to a non-segment redex");
  const Path& lowPath = r.segment->bottom();
  if (lowPath.empty()) throw InternalError("segment ends at the root");
  Path consumerPath = parentPath(lowPath);
  const Deduction E = nodeAt(d, lowPath);
  const Deduction R = nodeAt(d, consumerPath);
  int consumedIndex = lowPath.back();
  unsigned next = maxLabel(d) + 1;

  Deduction newE;
  newE.rule = E.rule;
  newE.conclusion = R.conclusion;
  newE.discharged = E.discharged;
  newE.premises.push_back(E.premises[0]);
  for (int j = 1; j <= 2; ++j) {
    // One consumer copy per minor branch: the consumer's discharge classes
    // and everything bound inside its remaining subtrees get fresh labels.
    std::set<unsigned> toRefresh(R.discharged.begin(), R.discharged.end());
    for (int t = 0; t < static_cast<int>(R.premises.size()); ++t)
      if (t != consumedIndex) collectBound(R.premises[t], toRefresh);
    std::map<unsigned, unsigned> fresh;
    for (unsigned c : toRefresh) fresh[c] = next++;

    Deduction copy;
    copy.rule = R.rule;
    copy.conclusion = R.conclusion;
    copy.discharged = R.discharged;
    for (unsigned& c : copy.discharged) {
      auto it = fresh.find(c);
      if (it != fresh.end()) c = it->second;
    }
    for (int t = 0; t < static_cast<int>(R.premises.size()); ++t) {
      if (t == consumedIndex)
        copy.premises.push_back(E.premises[j]);
      else
        copy.premises.push_back(relabelClasses(R.premises[t], fresh));
    }
    newE.premises.push_back(std::move(copy));
  }
  return replaceAt(d, consumerPath, std::move(newE));
}

Deduction reduceIE(const Deduction& d, const Redex& r) {
  Path pp = parentPath(r.position);
  const Deduction intro = nodeAt(d, r.position);
  const Deduction elim = nodeAt(d, pp);
  unsigned next = maxLabel(d) + 1;

  Deduction res;
  switch (elim.rule) {
    case RuleName::PosAndE1:
    case RuleName::NegOrE1:
    case RuleName::NegImpE1:
    case RuleName::PosConkE1:
    case RuleName::NegConkE1:
    case RuleName::PosHonkE1:
    case RuleName::NegHonkE1:
    case RuleName::PosNotE:
    case RuleName::NegNotE:
      res = intro.premises[0];
      break;
    case RuleName::PosAndE2:
    case RuleName::NegOrE2:
    case RuleName::NegImpE2:
    case RuleName::PosConkE2:
    case RuleName::NegConkE2:
    case RuleName::PosHonkE2:
    case RuleName::NegHonkE2:
      res = intro.premises[1];
      break;
    case RuleName::PosImpE:
      res = substPreserve(intro.premises[0], intro.discharged[0],
                          elim.premises[1], next);
      break;
    case RuleName::PosOrE: {
      int k = intro.rule == RuleName::PosOrI1 ? 0 : 1;
      res = substPreserve(elim.premises[k + 1], elim.discharged[k],
                          intro.premises[0], next);
      break;
    }
    case RuleName::NegAndE: {
      int k = intro.rule == RuleName::NegAndI1 ? 0 : 1;
      res = substPreserve(elim.premises[k + 1], elim.discharged[k],
                          intro.premises[0], next);
      break;
    }
    default:
      throw InternalError("introduction consumed by a rule with no reduction");
  }
  return replaceAt(d, pp, std::move(res));
}

namespace {

// Turns a copy of a case-split minor premise deriving alpha into a derivation
// of incoherence. A trailing reductio is unwrapped onto the shared outer
// class; case splits are capped recursively; anything else meets a conjugate
// hypothesis of the outer class.
Deduction capToBot(const Deduction& d, const SignedFormula& alpha, unsigned outerCls) {
  if (d.rule == RuleName::Red) {
    std::map<unsigned, unsigned> redirect{{d.discharged[0], outerCls}};
    return relabelClasses(d.premises[0], redirect);
  }
  if (isCaseSplit(d.rule)) {
    Deduction out = d;
    out.conclusion = Conclusion::absurdity();
    out.premises[1] = capToBot(out.premises[1], alpha, outerCls);
    out.premises[2] = capToBot(out.premises[2], alpha, outerCls);
    return out;
  }
  return Deduction::infer(RuleName::Nc, Conclusion::absurdity(), {},
                          {d, Deduction::hyp(outerCls, star(alpha))});
}

}  // namespace

Deduction reduceRE(const Deduction& d, const Redex& r) {
  Path pp = parentPath(r.position);
  const Deduction red = nodeAt(d, r.position);
  const Deduction elim = nodeAt(d, pp);
  const SignedFormula F = red.conclusion.signedFormula();
  const Deduction& body = red.premises[0];
  unsigned cls = red.discharged[0];
  unsigned next = maxLabel(d) + 1;

  auto rebuildAround = [&](const std::function<Deduction()>& gadget) {
    return replaceClassHyps(body, cls, gadget);
  };
  auto hypOf = [](unsigned c, Sign s, const Formula& f) {
    return Deduction::hyp(c, {s, f});
  };

  Deduction res;
  switch (elim.rule) {
    case RuleName::PosAndE1:
    case RuleName::PosAndE2: {
      int k = elim.rule == RuleName::PosAndE1 ? 0 : 1;
      RuleName gadgetRule = k == 0 ? RuleName::NegAndI1 : RuleName::NegAndI2;
      unsigned c = next++;
      Deduction gadget = Deduction::infer(
          gadgetRule, Conclusion::of(star(F)), {},
          {hypOf(c, Sign::Minus, F.body.operand(k))});
      res = Deduction::infer(RuleName::Red, elim.conclusion, {c},
                             {rebuildAround([&] { return gadget; })});
      break;
    }
    case RuleName::NegOrE1:
    case RuleName::NegOrE2: {
      int k = elim.rule == RuleName::NegOrE1 ? 0 : 1;
      RuleName gadgetRule = k == 0 ? RuleName::PosOrI1 : RuleName::PosOrI2;
      unsigned c = next++;
      Deduction gadget = Deduction::infer(
          gadgetRule, Conclusion::of(star(F)), {},
          {hypOf(c, Sign::Plus, F.body.operand(k))});
      res = Deduction::infer(RuleName::Red, elim.conclusion, {c},
                             {rebuildAround([&] { return gadget; })});
      break;
    }
    case RuleName::PosNotE: {
      unsigned c = next++;
      Deduction gadget = Deduction::infer(
          RuleName::NegNotI, Conclusion::of(star(F)), {},
          {hypOf(c, Sign::Plus, F.body.operand(0))});
      res = Deduction::infer(RuleName::Red, elim.conclusion, {c},
                             {rebuildAround([&] { return gadget; })});
      break;
    }
    case RuleName::NegNotE: {
      unsigned c = next++;
      Deduction gadget = Deduction::infer(
          RuleName::PosNotI, Conclusion::of(star(F)), {},
          {hypOf(c, Sign::Minus, F.body.operand(0))});
      res = Deduction::infer(RuleName::Red, elim.conclusion, {c},
                             {rebuildAround([&] { return gadget; })});
      break;
    }
    case RuleName::PosImpE: {
      // F = +(B imp A): each vanished application of the implication meets a
      // copy of the minor premise under a denial of the conclusion.
      const Deduction& minor = elim.premises[1];
      unsigned c = next++;
      Formula A = F.body.operand(1);
      res = Deduction::infer(
          RuleName::Red, elim.conclusion, {c}, {rebuildAround([&] {
            return Deduction::infer(RuleName::NegImpI, Conclusion::of(star(F)),
                                    {},
                                    {refreshBound(minor, next),
                                     hypOf(c, Sign::Minus, A)});
          })});
      break;
    }
    case RuleName::NegImpE2: {
      unsigned c = next++;
      Formula A = F.body.operand(1);
      res = Deduction::infer(
          RuleName::Red, elim.conclusion, {c}, {rebuildAround([&] {
            unsigned vacuous = next++;
            return Deduction::infer(RuleName::PosImpI, Conclusion::of(star(F)),
                                    {vacuous}, {hypOf(c, Sign::Plus, A)});
          })});
      break;
    }
    case RuleName::NegImpE1: {
      unsigned t = next++;
      Formula A = F.body.operand(0);
      Formula B = F.body.operand(1);
      res = Deduction::infer(
          RuleName::Red, elim.conclusion, {t}, {rebuildAround([&] {
            unsigned a = next++;
            unsigned v = next++;
            Deduction clash = Deduction::infer(
                RuleName::Nc, Conclusion::absurdity(), {},
                {hypOf(a, Sign::Plus, A), hypOf(t, Sign::Minus, A)});
            Deduction toB =
                Deduction::infer(RuleName::Red,
                                 Conclusion::of({Sign::Plus, B}), {v}, {clash});
            return Deduction::infer(RuleName::PosImpI, Conclusion::of(star(F)),
                                    {a}, {std::move(toB)});
          })});
      break;
    }
    case RuleName::PosOrE:
    case RuleName::NegAndE: {
      // The case split's own minor premises become the grounds for denying
      // (asserting) each disjunct (conjunct).
      bool orCase = elim.rule == RuleName::PosOrE;
      Sign componentSign = orCase ? Sign::Minus : Sign::Plus;
      RuleName gadgetRule = orCase ? RuleName::NegOrI : RuleName::PosAndI;
      Conclusion alpha = elim.conclusion;
      std::optional<unsigned> outer;
      if (!alpha.isAbsurdity()) outer = next++;

      auto gadget = [&] {
        std::vector<Deduction> parts;
        for (int k = 0; k < 2; ++k) {
          const Deduction& minor = elim.premises[k + 1];
          std::set<unsigned> toRefresh{elim.discharged[k]};
          collectBound(minor, toRefresh);
          std::map<unsigned, unsigned> fresh;
          for (unsigned c : toRefresh) fresh[c] = next++;
          Deduction copy = relabelClasses(minor, fresh);
          Deduction capped =
              outer ? capToBot(copy, alpha.signedFormula(), *outer)
                    : std::move(copy);
          parts.push_back(Deduction::infer(
              RuleName::Red,
              Conclusion::of({componentSign, F.body.operand(k)}),
              {fresh.at(elim.discharged[k])}, {std::move(capped)}));
        }
        return Deduction::infer(gadgetRule, Conclusion::of(star(F)), {},
                                std::move(parts));
      };
      Deduction rebuilt = rebuildAround(gadget);
      res = outer ? Deduction::infer(RuleName::Red, alpha, {*outer},
                                     {std::move(rebuilt)})
                  : std::move(rebuilt);
      break;
    }
    default:
      throw InternalError("reductio consumed by a rule with no reduction");
  }
  return replaceAt(d, pp, std::move(res));
}

Deduction reduceRNC(const Deduction& d, const Redex& r) {
  Path pp = parentPath(r.position);
  const Deduction nc = nodeAt(d, pp);
  int k = r.position.back();
  const Deduction& red = nc.premises[k];
  const Deduction& other = nc.premises[1 - k];
  unsigned next = maxLabel(d) + 1;
  Deduction res = substPreserve(red.premises[0], red.discharged[0], other, next);
  return replaceAt(d, pp, std::move(res));
}

Deduction reduceINC(const Deduction& d, const Redex& r) {
  Path pp = parentPath(r.position);
  const Deduction nc = nodeAt(d, pp);
  const Deduction& p0 = nc.premises[0];
  const Deduction& p1 = nc.premises[1];
  const Deduction& pos = p0.conclusion.sign() == Sign::Plus ? p0 : p1;
  const Deduction& neg = p0.conclusion.sign() == Sign::Plus ? p1 : p0;
  unsigned next = maxLabel(d) + 1;

  auto mkNc = [](Deduction a, Deduction b) {
    return Deduction::infer(RuleName::Nc, Conclusion::absurdity(), {},
                            {std::move(a), std::move(b)});
  };

  Deduction res;
  switch (pos.conclusion.body().conn()) {
    case Conn::And: {
      int k = neg.rule == RuleName::NegAndI1 ? 0 : 1;
      res = mkNc(pos.premises[k], neg.premises[0]);
      break;
    }
    case Conn::Or: {
      int k = pos.rule == RuleName::PosOrI1 ? 0 : 1;
      res = mkNc(pos.premises[0], neg.premises[k]);
      break;
    }
    case Conn::Imp: {
      Deduction grounded = substPreserve(pos.premises[0], pos.discharged[0],
                                         neg.premises[0], next);
      res = mkNc(std::move(grounded), neg.premises[1]);
      break;
    }
    case Conn::Not:
      res = mkNc(neg.premises[0], pos.premises[0]);
      break;
    case Conn::Conk:
      res = mkNc(pos.premises[0], neg.premises[0]);
      break;
    case Conn::Honk:
      res = mkNc(neg.premises[0], pos.premises[0]);
      break;
    default:
      throw InternalError("clashing introductions with no reduction");
  }
  return replaceAt(d, pp, std::move(res));
}

namespace {

Deduction simplifyPass(const Deduction& d, bool& changed) {
  Deduction out = d;
  for (Deduction& p : out.premises) p = simplifyPass(p, changed);
  if (isCaseSplit(out.rule)) {
    if (countClassHyps(out.premises[1], out.discharged[0]) == 0) {
      changed = true;
      return std::move(out.premises[1]);
    }
    if (countClassHyps(out.premises[2], out.discharged[1]) == 0) {
      changed = true;
      return std::move(out.premises[2]);
    }
  }
  return out;
}

}  // namespace

Deduction simplify(const Deduction& d) {
  Deduction cur = d;
  bool changed = true;
  while (changed) {
    changed = false;
    cur = simplifyPass(cur, changed);
  }
  return cur;
}

namespace {

std::string subcaseOf(const Deduction& d, const Redex& r) {
  switch (r.kind) {
    case RedexKind::Perm: {
      const Deduction& consumer = nodeAt(d, parentPath(r.position));
      return consumer.rule == RuleName::Nc ? "into-nc" : "into-elim";
    }
    case RedexKind::IE: {
      const Deduction& intro = nodeAt(d, r.position);
      const Deduction& elim = nodeAt(d, parentPath(r.position));
      return ieSubcase(intro.rule, elim.rule);
    }
    case RedexKind::RE: {
      const Deduction& elim = nodeAt(d, parentPath(r.position));
      switch (elim.rule) {
        case RuleName::PosAndE1: return "and1";
        case RuleName::PosAndE2: return "and2";
        case RuleName::NegOrE1: return "or1";
        case RuleName::NegOrE2: return "or2";
        case RuleName::PosNotE: return "+not";
        case RuleName::NegNotE: return "-not";
        case RuleName::PosImpE: return "imp-i";
        case RuleName::NegImpE2: return "imp-ii";
        case RuleName::NegImpE1: return "imp-iii";
        case RuleName::PosOrE: return "or";
        case RuleName::NegAndE: return "and";
        default: return "";
      }
    }
    case RedexKind::RNC: {
      const Deduction& red = nodeAt(d, r.position);
      bool atNc = false;
      forEachNode(red.premises[0], [&](const Deduction& n, const Path&) {
        if (n.rule != RuleName::Nc) return;
        for (const Deduction& p : n.premises)
          if (p.rule == RuleName::Hyp && p.label == red.discharged[0])
            atNc = true;
      });
      return atNc ? "2" : "1";
    }
    case RedexKind::INC: {
      const Deduction& intro = nodeAt(d, r.position);
      return connToken(intro.conclusion.body().conn());
    }
    case RedexKind::Simp:
      return "";
  }
  return "";
}

Deduction applyOp(const Deduction& d, const Redex& r) {
  switch (r.kind) {
    case RedexKind::Perm: return applyPermutative(d, r);
    case RedexKind::IE: return reduceIE(d, r);
    case RedexKind::RE: return reduceRE(d, r);
    case RedexKind::RNC: return reduceRNC(d, r);
    case RedexKind::INC: return reduceINC(d, r);
    case RedexKind::Simp: break;
  }
  throw InternalError("no operation for redex kind");
}

void pruneRegions(std::vector<Path>& regions) {
  std::sort(regions.begin(), regions.end(),
            [](const Path& a, const Path& b) { return a.size() < b.size(); });
  std::vector<Path> minimal;
  for (const Path& p : regions) {
    bool covered = false;
    for (const Path& q : minimal) covered |= isPrefix(q, p);
    if (!covered) minimal.push_back(p);
  }
  regions = std::move(minimal);
}

bool touchesRegion(const std::vector<Path>& regions, const Redex& r,
                   const Deduction& root) {
  auto inside = [&](const Path& p) {
    for (const Path& q : regions)
      if (isPrefix(q, p)) return true;
    return false;
  };
  if (inside(lowOf(r))) return true;
  if (r.kind == RedexKind::Perm) {
    for (const Path& p : r.segment->positions)
      if (inside(p)) return true;
  }
  // A bump upgrade: the premise left of the redex changed within the region.
  const Path& low = lowOf(r);
  if (!low.empty() && low.back() == 1) {
    const Deduction* parent = at(root, parentPath(low));
    if (parent && parent->rule == RuleName::Nc) {
      Path left = parentPath(low);
      left.push_back(0);
      if (inside(left)) return true;
    }
  }
  return false;
}

// After a principal step, material of the step's degree can surface inside
// the rewritten region: fresh clashes from substituted copies, upgraded
// conjugate premises, and case-split chains threaded through moved
// consumers. These are resolved within the same recorded step so the rank
// strictly falls from one record to the next.
Deduction resolveRegion(Deduction tree, Path seedRegion, int d0,
                        bool& sawIrreducible) {
  std::vector<Path> regions{std::move(seedRegion)};
  for (int budget = 100000;; --budget) {
    if (budget <= 0)
      throw InternalError("follow-up resolution did not terminate");
    std::vector<Redex> triggers;
    for (Redex& r : allRedexes(tree)) {
      if (r.effectiveDegree < d0) continue;
      if (!touchesRegion(regions, r, tree)) continue;
      triggers.push_back(std::move(r));
    }
    if (triggers.empty()) return tree;

    std::erase_if(triggers, [&](const Redex& r) {
      bool bad = irreducible(r);
      sawIrreducible |= bad;
      return bad;
    });
    if (triggers.empty()) return tree;

    std::optional<Redex> pick = pickAmong(tree, std::move(triggers));
    if (!pick)
      throw InternalError("no follow-up redex satisfies the selection conditions");
    regions.push_back(parentPath(pick->position));
    pruneRegions(regions);
    tree = applyOp(tree, *pick);
  }
}

std::vector<StuckRedex> listStuck(const Deduction& d) {
  std::vector<StuckRedex> out;
  for (Redex& r : allRedexes(d))
    if (irreducible(r))
      out.push_back({r.kind, r.formula->body.conn(), r.position});
  return out;
}

}  // namespace

NormalizeResult normalize(const Deduction& d, const SystemConfig& cfg,
                          int maxSteps) {
  Deduction cur = d;
  Trace trace;
  for (int step = 0;; ++step) {
    std::optional<Redex> r = selectRedex(cur);
    if (!r) {
      trace.outcome = Outcome::Normal;
      break;
    }
    if (irreducible(*r)) {
      trace.outcome = Outcome::Stuck;
      trace.stuckRedexes = listStuck(cur);
      break;
    }
    if (step >= maxSteps) {
      trace.outcome = Outcome::StepLimit;
      break;
    }

    Rank before = rank(cur);
    std::string subcase = subcaseOf(cur, *r);
    Deduction next = applyOp(cur, *r);
    bool sawIrreducible = false;
    next = resolveRegion(std::move(next), parentPath(r->position),
                         r->effectiveDegree, sawIrreducible);
    next = simplify(next);
    Rank after = rank(next);

    if (!(after < before) && !sawIrreducible)
      throw InternalError("rank did not decrease");
    CheckReport closure = check(next, cfg);
    if (!closure.ok)
      throw InternalError("rewrite broke the deduction: " +
                          closure.violations.front().message);

    trace.steps.push_back(
        {step, r->kind, std::move(subcase), r->position, before, after});
    cur = std::move(next);
    if (sawIrreducible) {
      trace.outcome = Outcome::Stuck;
      trace.stuckRedexes = listStuck(cur);
      break;
    }
  }
  return {std::move(cur), std::move(trace)};
}

namespace {

Deduction expandNc(Deduction nc, unsigned& next);

Deduction clash(Deduction a, Deduction b, unsigned& next) {
  Deduction n = Deduction::infer(RuleName::Nc, Conclusion::absurdity(), {},
                                 {std::move(a), std::move(b)});
  if (n.premises[0].conclusion.degree() > 0) return expandNc(std::move(n), next);
  return n;
}

Deduction expandNc(Deduction nc, unsigned& next) {
  bool firstPos = nc.premises[0].conclusion.sign() == Sign::Plus;
  Deduction pos = std::move(nc.premises[firstPos ? 0 : 1]);
  Deduction neg = std::move(nc.premises[firstPos ? 1 : 0]);
  Formula F = pos.conclusion.body();
  auto of = [&](Sign s, const Formula& f) { return Conclusion::of({s, f}); };

  switch (F.conn()) {
    case Conn::Or: {
      unsigned i = next++;
      unsigned j = next++;
      Deduction negCopy = refreshBound(neg, next);
      Deduction left = clash(
          Deduction::hyp(i, {Sign::Plus, F.operand(0)}),
          Deduction::infer(RuleName::NegOrE1, of(Sign::Minus, F.operand(0)), {},
                           {std::move(neg)}),
          next);
      Deduction right = clash(
          Deduction::hyp(j, {Sign::Plus, F.operand(1)}),
          Deduction::infer(RuleName::NegOrE2, of(Sign::Minus, F.operand(1)), {},
                           {std::move(negCopy)}),
          next);
      return Deduction::infer(RuleName::PosOrE, Conclusion::absurdity(), {i, j},
                              {std::move(pos), std::move(left), std::move(right)});
    }
    case Conn::And: {
      unsigned i = next++;
      unsigned j = next++;
      Deduction posCopy = refreshBound(pos, next);
      Deduction left = clash(
          Deduction::infer(RuleName::PosAndE1, of(Sign::Plus, F.operand(0)), {},
                           {std::move(pos)}),
          Deduction::hyp(i, {Sign::Minus, F.operand(0)}), next);
      Deduction right = clash(
          Deduction::infer(RuleName::PosAndE2, of(Sign::Plus, F.operand(1)), {},
                           {std::move(posCopy)}),
          Deduction::hyp(j, {Sign::Minus, F.operand(1)}), next);
      return Deduction::infer(RuleName::NegAndE, Conclusion::absurdity(), {i, j},
                              {std::move(neg), std::move(left), std::move(right)});
    }
    case Conn::Imp: {
      Deduction negCopy = refreshBound(neg, next);
      Deduction antecedent = Deduction::infer(
          RuleName::NegImpE1, of(Sign::Plus, F.operand(0)), {}, {std::move(neg)});
      Deduction consequent = Deduction::infer(
          RuleName::PosImpE, of(Sign::Plus, F.operand(1)), {},
          {std::move(pos), std::move(antecedent)});
      Deduction denial = Deduction::infer(
          RuleName::NegImpE2, of(Sign::Minus, F.operand(1)), {},
          {std::move(negCopy)});
      return clash(std::move(consequent), std::move(denial), next);
    }
    case Conn::Not: {
      Deduction asserted = Deduction::infer(
          RuleName::NegNotE, of(Sign::Plus, F.operand(0)), {}, {std::move(neg)});
      Deduction denied = Deduction::infer(
          RuleName::PosNotE, of(Sign::Minus, F.operand(0)), {}, {std::move(pos)});
      return clash(std::move(denied), std::move(asserted), next);
    }
    default:
      throw UnsupportedConnective(
          std::string("no atomization for ") + connToken(F.conn()));
  }
}

Deduction atomizeWalk(const Deduction& d, unsigned& next) {
  Deduction out = d;
  for (Deduction& p : out.premises) p = atomizeWalk(p, next);
  if (out.rule == RuleName::Nc && out.premises[0].conclusion.degree() > 0)
    return expandNc(std::move(out), next);
  return out;
}

}  // namespace

Deduction atomizeNC(const Deduction& d) {
  bool unsupported = false;
  Conn which = Conn::Atom;
  forEachNode(d, [&](const Deduction& n, const Path&) {
    if (!n.conclusion.isSigned()) return;
    std::function<void(const Formula&)> scan = [&](const Formula& f) {
      if (f.conn() == Conn::Conk || f.conn() == Conn::Honk ||
          f.conn() == Conn::Tonk) {
        unsupported = true;
        which = f.conn();
      }
      for (const Formula& op : f.operands()) scan(op);
    };
    scan(n.conclusion.body());
  });
  if (unsupported)
    throw UnsupportedConnective(std::string("no atomization for ") +
                                connToken(which));
  unsigned next = maxLabel(d) + 1;
  return atomizeWalk(d, next);
}

}  // namespace bilat
