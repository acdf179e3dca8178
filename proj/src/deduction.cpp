#include "bilat/deduction.hpp"

#include <algorithm>
#include <map>

namespace bilat {

Deduction Deduction::hyp(unsigned label, SignedFormula sf) {
  Deduction d;
  d.rule = RuleName::Hyp;
  d.conclusion = Conclusion::of(std::move(sf));
  d.label = label;
  return d;
}

Deduction Deduction::infer(RuleName rule, Conclusion conclusion,
                           std::vector<unsigned> discharged,
                           std::vector<Deduction> premises) {
  Deduction d;
  d.rule = rule;
  d.conclusion = std::move(conclusion);
  d.discharged = std::move(discharged);
  d.premises = std::move(premises);
  return d;
}

bool operator==(const Deduction& a, const Deduction& b) {
  if (a.rule != b.rule || a.conclusion != b.conclusion) return false;
  if (a.rule == RuleName::Hyp) return a.label == b.label;
  if (a.discharged != b.discharged) return false;
  if (a.premises.size() != b.premises.size()) return false;
  for (std::size_t i = 0; i < a.premises.size(); ++i)
    if (!(a.premises[i] == b.premises[i])) return false;
  return true;
}

const Deduction* at(const Deduction& d, const Path& path) {
  const Deduction* cur = &d;
  for (int i : path) {
    if (i < 0 || i >= static_cast<int>(cur->premises.size())) return nullptr;
    cur = &cur->premises[i];
  }
  return cur;
}

Deduction* at(Deduction& d, const Path& path) {
  return const_cast<Deduction*>(at(static_cast<const Deduction&>(d), path));
}

int nodeCount(const Deduction& d) {
  int n = 1;
  for (const Deduction& p : d.premises) n += nodeCount(p);
  return n;
}

unsigned maxLabel(const Deduction& d) {
  unsigned m = d.rule == RuleName::Hyp ? d.label : 0;
  for (unsigned c : d.discharged) m = std::max(m, c);
  for (const Deduction& p : d.premises) m = std::max(m, maxLabel(p));
  return m;
}

namespace {
void walk(const Deduction& d, Path& path,
          const std::function<void(const Deduction&, const Path&)>& fn) {
  fn(d, path);
  for (int i = 0; i < static_cast<int>(d.premises.size()); ++i) {
    path.push_back(i);
    walk(d.premises[i], path, fn);
    path.pop_back();
  }
}

bool isoWalk(const Deduction& a, const Deduction& b,
             std::map<unsigned, unsigned>& fwd, std::map<unsigned, unsigned>& rev) {
  auto bind = [&](unsigned la, unsigned lb) {
    auto f = fwd.find(la);
    auto r = rev.find(lb);
    if (f == fwd.end() && r == rev.end()) {
      fwd[la] = lb;
      rev[lb] = la;
      return true;
    }
    return f != fwd.end() && r != rev.end() && f->second == lb && r->second == la;
  };
  if (a.rule != b.rule || a.conclusion != b.conclusion) return false;
  if (a.rule == RuleName::Hyp) return bind(a.label, b.label);
  if (a.discharged.size() != b.discharged.size()) return false;
  for (std::size_t i = 0; i < a.discharged.size(); ++i)
    if (!bind(a.discharged[i], b.discharged[i])) return false;
  if (a.premises.size() != b.premises.size()) return false;
  for (std::size_t i = 0; i < a.premises.size(); ++i)
    if (!isoWalk(a.premises[i], b.premises[i], fwd, rev)) return false;
  return true;
}
}  // namespace

void forEachNode(const Deduction& d,
                 const std::function<void(const Deduction&, const Path&)>& fn) {
  Path path;
  walk(d, path, fn);
}

bool isomorphic(const Deduction& a, const Deduction& b) {
  std::map<unsigned, unsigned> fwd, rev;
  return isoWalk(a, b, fwd, rev);
}

}  // namespace bilat
