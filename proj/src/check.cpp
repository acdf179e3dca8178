#include "bilat/check.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bilat/sexpr.hpp"

namespace bilat {

const char* violationKindToken(ViolationKind k) {
  switch (k) {
    case ViolationKind::Arity: return "arity";
    case ViolationKind::Schema: return "schema";
    case ViolationKind::AbsurdityAsHypothesis: return "absurdity-as-hypothesis";
    case ViolationKind::InconsistentAssumptionClass: return "inconsistent-class";
    case ViolationKind::DischargeScope: return "discharge-scope";
    case ViolationKind::RuleOutsideSystem: return "rule-outside-system";
    case ViolationKind::Restriction: return "restriction";
  }
  return "";
}

namespace {

bool isPrefix(const Path& prefix, const Path& path) {
  if (prefix.size() > path.size()) return false;
  return std::equal(prefix.begin(), prefix.end(), path.begin());
}

struct HypOccurrence {
  unsigned label;
  Conclusion formula;
  Path position;
};

struct DischargeSite {
  unsigned label;
  Path position;
  RuleName rule;
  int slot;
};

struct Checker {
  const SystemConfig& cfg;
  std::vector<Violation> out;
  std::vector<HypOccurrence> hyps;
  std::vector<DischargeSite> discharges;

  void add(const Path& p, ViolationKind k, RuleName r, std::string msg) {
    out.push_back({p, k, r, std::move(msg)});
  }

  void scanConnectives(const Deduction& n, const Path& path) {
    if (!n.conclusion.isSigned()) return;
    std::set<Conn> seen;
    collect(n.conclusion.body(), seen);
    for (Conn c : seen) {
      if (!cfg.hasConn(c)) {
        add(path, ViolationKind::RuleOutsideSystem, n.rule,
            std::string("connective ") + connToken(c) + " not in system");
      }
    }
  }

  static void collect(const Formula& f, std::set<Conn>& seen) {
    if (!f.isAtom()) seen.insert(f.conn());
    for (const Formula& op : f.operands()) collect(op, seen);
  }

  // Expected formula for an occupied discharge class; nullopt when the node
  // shape does not determine one.
  static std::optional<SignedFormula> classFormula(const Deduction& n, int slot) {
    switch (n.rule) {
      case RuleName::PosImpI:
        if (n.conclusion.isSigned() && n.conclusion.sign() == Sign::Plus &&
            n.conclusion.body().conn() == Conn::Imp)
          return SignedFormula{Sign::Plus, n.conclusion.body().operand(0)};
        return std::nullopt;
      case RuleName::Red:
        if (n.conclusion.isSigned()) return star(n.conclusion.signedFormula());
        return std::nullopt;
      case RuleName::PosOrE: {
        const Conclusion& major = n.premises[0].conclusion;
        if (major.isSigned() && major.sign() == Sign::Plus &&
            major.body().conn() == Conn::Or)
          return SignedFormula{Sign::Plus, major.body().operand(slot)};
        return std::nullopt;
      }
      case RuleName::NegAndE: {
        const Conclusion& major = n.premises[0].conclusion;
        if (major.isSigned() && major.sign() == Sign::Minus &&
            major.body().conn() == Conn::And)
          return SignedFormula{Sign::Minus, major.body().operand(slot)};
        return std::nullopt;
      }
      default:
        return std::nullopt;
    }
  }

  void schema(const Deduction& n, const Path& path) {
    const Conclusion& c = n.conclusion;
    auto fail = [&](const std::string& msg) {
      add(path, ViolationKind::Schema, n.rule, msg);
    };
    auto prem = [&](int i) -> const Conclusion& { return n.premises[i].conclusion; };
    auto sf = [](Sign s, Formula f) { return Conclusion::of({s, std::move(f)}); };
    // Conclusion must be a signed formula of the given sign and connective.
    auto conclShape = [&](Sign s, Conn cn) {
      if (c.isSigned() && c.sign() == s && c.body().conn() == cn) return true;
      fail(std::string("conclusion must be ") + signToken(s) + " " + connToken(cn));
      return false;
    };
    auto majorShape = [&](Sign s, Conn cn) {
      const Conclusion& m = prem(0);
      if (m.isSigned() && m.sign() == s && m.body().conn() == cn) return true;
      fail(std::string("major premise must be ") + signToken(s) + " " + connToken(cn));
      return false;
    };
    auto expect = [&](int i, const Conclusion& want, const char* what) {
      if (prem(i) == want) return true;
      fail(std::string(what) + " must be " + print(want));
      return false;
    };

    switch (n.rule) {
      case RuleName::Hyp:
        if (c.isAbsurdity())
          add(path, ViolationKind::AbsurdityAsHypothesis, n.rule,
              "a hypothesis cannot be the incoherence marker");
        break;

      case RuleName::PosAndI:
        if (conclShape(Sign::Plus, Conn::And)) {
          expect(0, sf(Sign::Plus, c.body().operand(0)), "first premise");
          expect(1, sf(Sign::Plus, c.body().operand(1)), "second premise");
        }
        break;
      case RuleName::PosAndE1:
      case RuleName::PosAndE2:
        if (majorShape(Sign::Plus, Conn::And)) {
          int k = n.rule == RuleName::PosAndE1 ? 0 : 1;
          if (c != sf(Sign::Plus, prem(0).body().operand(k)))
            fail("conclusion must be the matching conjunct");
        }
        break;
      case RuleName::NegAndI1:
      case RuleName::NegAndI2:
        if (conclShape(Sign::Minus, Conn::And)) {
          int k = n.rule == RuleName::NegAndI1 ? 0 : 1;
          expect(0, sf(Sign::Minus, c.body().operand(k)), "premise");
        }
        break;
      case RuleName::NegAndE:
        if (majorShape(Sign::Minus, Conn::And)) {
          expect(1, c, "first minor premise");
          expect(2, c, "second minor premise");
        }
        break;

      case RuleName::PosOrI1:
      case RuleName::PosOrI2:
        if (conclShape(Sign::Plus, Conn::Or)) {
          int k = n.rule == RuleName::PosOrI1 ? 0 : 1;
          expect(0, sf(Sign::Plus, c.body().operand(k)), "premise");
        }
        break;
      case RuleName::PosOrE:
        if (majorShape(Sign::Plus, Conn::Or)) {
          expect(1, c, "first minor premise");
          expect(2, c, "second minor premise");
        }
        break;
      case RuleName::NegOrI:
        if (conclShape(Sign::Minus, Conn::Or)) {
          expect(0, sf(Sign::Minus, c.body().operand(0)), "first premise");
          expect(1, sf(Sign::Minus, c.body().operand(1)), "second premise");
        }
        break;
      case RuleName::NegOrE1:
      case RuleName::NegOrE2:
        if (majorShape(Sign::Minus, Conn::Or)) {
          int k = n.rule == RuleName::NegOrE1 ? 0 : 1;
          if (c != sf(Sign::Minus, prem(0).body().operand(k)))
            fail("conclusion must be the matching disjunct");
        }
        break;

      case RuleName::PosImpI:
        if (conclShape(Sign::Plus, Conn::Imp))
          expect(0, sf(Sign::Plus, c.body().operand(1)), "premise");
        break;
      case RuleName::PosImpE:
        if (majorShape(Sign::Plus, Conn::Imp)) {
          expect(1, sf(Sign::Plus, prem(0).body().operand(0)), "minor premise");
          if (c != sf(Sign::Plus, prem(0).body().operand(1)))
            fail("conclusion must be the consequent");
        }
        break;
      case RuleName::NegImpI:
        if (conclShape(Sign::Minus, Conn::Imp)) {
          expect(0, sf(Sign::Plus, c.body().operand(0)), "first premise");
          expect(1, sf(Sign::Minus, c.body().operand(1)), "second premise");
        }
        break;
      case RuleName::NegImpE1:
        if (majorShape(Sign::Minus, Conn::Imp)) {
          if (c != sf(Sign::Plus, prem(0).body().operand(0)))
            fail("conclusion must be the asserted antecedent");
        }
        break;
      case RuleName::NegImpE2:
        if (majorShape(Sign::Minus, Conn::Imp)) {
          if (c != sf(Sign::Minus, prem(0).body().operand(1)))
            fail("conclusion must be the denied consequent");
        }
        break;

      case RuleName::PosNotI:
        if (conclShape(Sign::Plus, Conn::Not))
          expect(0, sf(Sign::Minus, c.body().operand(0)), "premise");
        break;
      case RuleName::PosNotE:
        if (majorShape(Sign::Plus, Conn::Not)) {
          if (c != sf(Sign::Minus, prem(0).body().operand(0)))
            fail("conclusion must deny the negated formula");
        }
        break;
      case RuleName::NegNotI:
        if (conclShape(Sign::Minus, Conn::Not))
          expect(0, sf(Sign::Plus, c.body().operand(0)), "premise");
        break;
      case RuleName::NegNotE:
        if (majorShape(Sign::Minus, Conn::Not)) {
          if (c != sf(Sign::Plus, prem(0).body().operand(0)))
            fail("conclusion must assert the negated formula");
        }
        break;

      case RuleName::Red:
        if (!c.isSigned()) {
          fail("conclusion must be a signed formula");
        } else if (!prem(0).isAbsurdity()) {
          fail("premise must be the incoherence marker");
        }
        break;
      case RuleName::Nc:
        if (!c.isAbsurdity()) {
          fail("conclusion must be the incoherence marker");
        } else if (!prem(0).isSigned() || !prem(1).isSigned()) {
          fail("premises must be signed formulas");
        } else if (prem(1) != Conclusion::of(star(prem(0).signedFormula()))) {
          fail("premises must be a formula and its conjugate");
        }
        break;

      case RuleName::PosTonkI:
        if (conclShape(Sign::Plus, Conn::Tonk))
          expect(0, sf(Sign::Plus, c.body().operand(0)), "premise");
        break;
      case RuleName::TonkE:
        if (majorShape(Sign::Plus, Conn::Tonk)) {
          if (c != sf(Sign::Plus, prem(0).body().operand(1)))
            fail("conclusion must be the second component");
        }
        break;

      case RuleName::PosConkI:
        if (conclShape(Sign::Plus, Conn::Conk)) {
          expect(0, sf(Sign::Plus, c.body().operand(0)), "first premise");
          expect(1, sf(Sign::Plus, c.body().operand(1)), "second premise");
        }
        break;
      case RuleName::PosConkE1:
      case RuleName::PosConkE2:
        if (majorShape(Sign::Plus, Conn::Conk)) {
          int k = n.rule == RuleName::PosConkE1 ? 0 : 1;
          if (c != sf(Sign::Plus, prem(0).body().operand(k)))
            fail("conclusion must be the matching component");
        }
        break;
      case RuleName::NegConkI:
        if (conclShape(Sign::Minus, Conn::Conk)) {
          expect(0, sf(Sign::Minus, c.body().operand(0)), "first premise");
          expect(1, sf(Sign::Minus, c.body().operand(1)), "second premise");
        }
        break;
      case RuleName::NegConkE1:
      case RuleName::NegConkE2:
        if (majorShape(Sign::Minus, Conn::Conk)) {
          int k = n.rule == RuleName::NegConkE1 ? 0 : 1;
          if (c != sf(Sign::Minus, prem(0).body().operand(k)))
            fail("conclusion must be the matching component");
        }
        break;

      case RuleName::PosHonkI:
        if (conclShape(Sign::Plus, Conn::Honk)) {
          expect(0, sf(Sign::Minus, c.body().operand(0)), "first premise");
          expect(1, sf(Sign::Plus, c.body().operand(1)), "second premise");
        }
        break;
      case RuleName::PosHonkE1:
        if (majorShape(Sign::Plus, Conn::Honk)) {
          if (c != sf(Sign::Minus, prem(0).body().operand(0)))
            fail("conclusion must deny the first component");
        }
        break;
      case RuleName::PosHonkE2:
        if (majorShape(Sign::Plus, Conn::Honk)) {
          if (c != sf(Sign::Plus, prem(0).body().operand(1)))
            fail("conclusion must assert the second component");
        }
        break;
      case RuleName::NegHonkI:
        if (conclShape(Sign::Minus, Conn::Honk)) {
          expect(0, sf(Sign::Plus, c.body().operand(0)), "first premise");
          expect(1, sf(Sign::Minus, c.body().operand(1)), "second premise");
        }
        break;
      case RuleName::NegHonkE1:
        if (majorShape(Sign::Minus, Conn::Honk)) {
          if (c != sf(Sign::Plus, prem(0).body().operand(0)))
            fail("conclusion must assert the first component");
        }
        break;
      case RuleName::NegHonkE2:
        if (majorShape(Sign::Minus, Conn::Honk)) {
          if (c != sf(Sign::Minus, prem(0).body().operand(1)))
            fail("conclusion must deny the second component");
        }
        break;
    }
  }

  void visit(const Deduction& n, Path& path) {
    const RuleInfo& info = ruleInfo(n.rule);

    if (n.rule == RuleName::Red && cfg.reductioMode == Mode::Disabled)
      add(path, ViolationKind::RuleOutsideSystem, n.rule, "reductio is disabled");
    if (n.rule == RuleName::Nc && cfg.ncMode == Mode::Disabled)
      add(path, ViolationKind::RuleOutsideSystem, n.rule,
          "non-contradiction is disabled");
    if (info.conn != Conn::Atom && !cfg.hasConn(info.conn))
      add(path, ViolationKind::RuleOutsideSystem, n.rule,
          std::string("rule for ") + connToken(info.conn) + " not in system");
    scanConnectives(n, path);

    bool shapeOk = true;
    if (static_cast<int>(n.premises.size()) != info.arity) {
      std::ostringstream msg;
      msg << info.token << " takes " << info.arity << " premises, got "
          << n.premises.size();
      add(path, ViolationKind::Arity, n.rule, msg.str());
      shapeOk = false;
    }
    if (static_cast<int>(n.discharged.size()) != info.dischargeSlots) {
      std::ostringstream msg;
      msg << info.token << " discharges " << info.dischargeSlots
          << " classes, got " << n.discharged.size();
      add(path, ViolationKind::Arity, n.rule, msg.str());
      shapeOk = false;
    }

    if (shapeOk) {
      schema(n, path);
      if (n.rule == RuleName::Red && cfg.reductioMode == Mode::AtomicOnly &&
          n.conclusion.degree() > 0)
        add(path, ViolationKind::Restriction, n.rule,
            "reductio is restricted to atomic conclusions");
      if (n.rule == RuleName::Nc && cfg.ncMode == Mode::AtomicOnly &&
          n.premises[0].conclusion.degree() > 0)
        add(path, ViolationKind::Restriction, n.rule,
            "non-contradiction is restricted to atomic premises");
      for (int slot = 0; slot < info.dischargeSlots; ++slot)
        discharges.push_back({n.discharged[slot], path, n.rule, slot});
    }

    if (n.rule == RuleName::Hyp)
      hyps.push_back({n.label, n.conclusion, path});

    for (int i = 0; i < static_cast<int>(n.premises.size()); ++i) {
      path.push_back(i);
      visit(n.premises[i], path);
      path.pop_back();
    }
  }

  void globalChecks(const Deduction& root) {
    std::map<unsigned, Conclusion> firstFormula;
    for (const HypOccurrence& h : hyps) {
      auto [it, inserted] = firstFormula.emplace(h.label, h.formula);
      if (!inserted && it->second != h.formula) {
        std::ostringstream msg;
        msg << "class " << h.label << " used with a different formula";
        add(h.position, ViolationKind::InconsistentAssumptionClass,
            RuleName::Hyp, msg.str());
      }
    }

    std::map<unsigned, const DischargeSite*> firstSite;
    for (const DischargeSite& site : discharges) {
      auto [it, inserted] = firstSite.emplace(site.label, &site);
      if (!inserted) {
        std::ostringstream msg;
        msg << "class " << site.label << " discharged more than once";
        add(site.position, ViolationKind::DischargeScope, site.rule, msg.str());
        continue;
      }

      Path designated = site.position;
      designated.push_back(dischargePremise(site.rule, site.slot));
      std::optional<SignedFormula> want;
      if (const Deduction* node = ::bilat::at(root, site.position))
        want = classFormula(*node, site.slot);
      for (const HypOccurrence& h : hyps) {
        if (h.label != site.label) continue;
        if (!isPrefix(designated, h.position)) {
          std::ostringstream msg;
          msg << "class " << h.label
              << " has a hypothesis outside the subtree its discharge binds";
          add(h.position, ViolationKind::DischargeScope, site.rule, msg.str());
        }
        if (want && h.formula != Conclusion::of(*want)) {
          std::ostringstream msg;
          msg << "class " << h.label << " must carry " << print(*want);
          add(site.position, ViolationKind::Schema, site.rule, msg.str());
          break;
        }
      }
    }
  }
};

}  // namespace

CheckReport check(const Deduction& d, const SystemConfig& cfg) {
  Checker checker{cfg};
  Path path;
  checker.visit(d, path);
  checker.globalChecks(d);
  CheckReport report;
  report.ok = checker.out.empty();
  report.violations = std::move(checker.out);
  return report;
}

std::map<unsigned, AssumptionInfo> openAssumptions(const Deduction& d) {
  std::set<unsigned> bound;
  std::map<unsigned, AssumptionInfo> open;
  forEachNode(d, [&](const Deduction& n, const Path&) {
    for (unsigned c : n.discharged) bound.insert(c);
  });
  forEachNode(d, [&](const Deduction& n, const Path&) {
    if (n.rule != RuleName::Hyp || bound.count(n.label)) return;
    auto [it, inserted] =
        open.emplace(n.label, AssumptionInfo{n.conclusion.signedFormula(), 1});
    if (!inserted) ++it->second.occurrences;
  });
  return open;
}

std::set<SignedFormula> openSignedFormulas(const Deduction& d) {
  std::set<SignedFormula> out;
  for (const auto& [label, info] : openAssumptions(d)) out.insert(info.formula);
  return out;
}

namespace {

void collectLabels(const Deduction& d, std::set<unsigned>& labels) {
  if (d.rule == RuleName::Hyp) labels.insert(d.label);
  for (unsigned c : d.discharged) labels.insert(c);
  for (const Deduction& p : d.premises) collectLabels(p, labels);
}

Deduction relabel(const Deduction& d, const std::map<unsigned, unsigned>& map) {
  Deduction out = d;
  if (out.rule == RuleName::Hyp) {
    auto it = map.find(out.label);
    if (it != map.end()) out.label = it->second;
  }
  for (unsigned& c : out.discharged) {
    auto it = map.find(c);
    if (it != map.end()) c = it->second;
  }
  for (Deduction& p : out.premises) p = relabel(p, map);
  return out;
}

Deduction substWalk(const Deduction& d, unsigned cls, const Deduction& replacement,
                    unsigned& next) {
  if (d.rule == RuleName::Hyp && d.label == cls) {
    std::set<unsigned> labels;
    collectLabels(replacement, labels);
    std::map<unsigned, unsigned> fresh;
    for (unsigned l : labels) fresh[l] = next++;
    return relabel(replacement, fresh);
  }
  Deduction out = d;
  for (Deduction& p : out.premises) p = substWalk(p, cls, replacement, next);
  return out;
}

}  // namespace

Deduction substituteHypotheses(const Deduction& d, unsigned cls,
                               const Deduction& replacement) {
  bool bound = false;
  forEachNode(d, [&](const Deduction& n, const Path&) {
    for (unsigned c : n.discharged) bound |= c == cls;
  });
  if (bound)
    throw std::invalid_argument("assumption class is discharged in this deduction");

  std::optional<Conclusion> classFormula;
  forEachNode(d, [&](const Deduction& n, const Path&) {
    if (n.rule == RuleName::Hyp && n.label == cls && !classFormula)
      classFormula = n.conclusion;
  });
  if (!classFormula) return d;
  if (replacement.conclusion != *classFormula)
    throw std::invalid_argument("replacement conclusion does not match the class formula");

  unsigned next = std::max(maxLabel(d), maxLabel(replacement)) + 1;
  return substWalk(d, cls, replacement, next);
}

}  // namespace bilat
