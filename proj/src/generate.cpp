#include "bilat/generate.hpp"

#include <functional>
#include <map>
#include <random>

namespace bilat {

namespace {

// Goal-directed construction: every recursive call receives a node budget
// that is never less than the cheapest completion of its goal (one node for
// a signed goal, three for incoherence), so the finished tree always fits
// the requested size.
struct Gen {
  std::mt19937_64 rng;
  const GeneratorParams& params;
  unsigned nextLabel = 1;
  std::map<SignedFormula, unsigned> openLabels;
  std::vector<std::pair<unsigned, SignedFormula>> scope;
  std::vector<Conn> conns;

  explicit Gen(const GeneratorParams& p) : rng(p.seed), params(p) {
    for (Conn c : {Conn::And, Conn::Or, Conn::Imp, Conn::Not, Conn::Conk,
                   Conn::Honk, Conn::Tonk})
      if (p.config.hasConn(c)) conns.push_back(c);
  }

  bool ncOn() const { return params.config.ncMode != Mode::Disabled; }

  bool redOk(const SignedFormula& g) const {
    switch (params.config.reductioMode) {
      case Mode::General: return ncOn();
      case Mode::AtomicOnly: return ncOn() && g.degree() == 0;
      case Mode::Disabled: return false;
    }
    return false;
  }

  int randInt(int n) {
    return std::uniform_int_distribution<int>(0, n - 1)(rng);
  }
  bool chance(double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
  }

  Formula atom() {
    static const char* names[] = {"A", "B", "C", "D"};
    return Formula::atom(names[randInt(4)]);
  }

  Formula formula(int depth) {
    if (depth <= 0 || conns.empty() || chance(0.45)) return atom();
    Conn c = conns[randInt(static_cast<int>(conns.size()))];
    std::vector<Formula> ops;
    for (int i = 0; i < connArity(c); ++i) ops.push_back(formula(depth - 1));
    return Formula::make(c, std::move(ops));
  }

  // Splits (total - 1) among children, honouring each child's minimum.
  std::vector<int> splitBudget(int total, const std::vector<int>& mins) {
    std::vector<int> out = mins;
    int extra = total - 1;
    for (int m : mins) extra -= m;
    while (extra > 0) {
      out[randInt(static_cast<int>(out.size()))] += 1;
      --extra;
    }
    return out;
  }

  Deduction useHyp(const SignedFormula& g) {
    std::vector<unsigned> matches;
    for (const auto& [label, sf] : scope)
      if (sf == g) matches.push_back(label);
    if (!matches.empty() && chance(0.6))
      return Deduction::hyp(matches[randInt(static_cast<int>(matches.size()))], g);
    auto it = openLabels.find(g);
    if (it == openLabels.end())
      it = openLabels.emplace(g, nextLabel++).first;
    return Deduction::hyp(it->second, g);
  }

  std::optional<Deduction> intro(const SignedFormula& g, int budget) {
    const Formula& f = g.body;
    auto two = [&](RuleName r, SignedFormula a, SignedFormula b)
        -> std::optional<Deduction> {
      if (budget < 3) return std::nullopt;
      std::vector<int> shares = splitBudget(budget, {1, 1});
      Deduction left = goal(a, shares[0]);
      Deduction right = goal(b, shares[1]);
      return Deduction::infer(r, Conclusion::of(g), {},
                              {std::move(left), std::move(right)});
    };
    auto one = [&](RuleName r, SignedFormula a) -> std::optional<Deduction> {
      if (budget < 2) return std::nullopt;
      return Deduction::infer(r, Conclusion::of(g), {}, {goal(a, budget - 1)});
    };
    bool plus = g.sign == Sign::Plus;
    switch (f.conn()) {
      case Conn::And:
        if (plus)
          return two(RuleName::PosAndI, {Sign::Plus, f.operand(0)},
                     {Sign::Plus, f.operand(1)});
        return chance(0.5)
                   ? one(RuleName::NegAndI1, {Sign::Minus, f.operand(0)})
                   : one(RuleName::NegAndI2, {Sign::Minus, f.operand(1)});
      case Conn::Or:
        if (!plus)
          return two(RuleName::NegOrI, {Sign::Minus, f.operand(0)},
                     {Sign::Minus, f.operand(1)});
        return chance(0.5)
                   ? one(RuleName::PosOrI1, {Sign::Plus, f.operand(0)})
                   : one(RuleName::PosOrI2, {Sign::Plus, f.operand(1)});
      case Conn::Imp:
        if (!plus)
          return two(RuleName::NegImpI, {Sign::Plus, f.operand(0)},
                     {Sign::Minus, f.operand(1)});
        else {
          if (budget < 2) return std::nullopt;
          unsigned c = nextLabel++;
          scope.emplace_back(c, SignedFormula{Sign::Plus, f.operand(0)});
          Deduction body = goal({Sign::Plus, f.operand(1)}, budget - 1);
          scope.pop_back();
          return Deduction::infer(RuleName::PosImpI, Conclusion::of(g), {c},
                                  {std::move(body)});
        }
      case Conn::Not:
        return one(plus ? RuleName::PosNotI : RuleName::NegNotI,
                   {plus ? Sign::Minus : Sign::Plus, f.operand(0)});
      case Conn::Conk:
        return two(plus ? RuleName::PosConkI : RuleName::NegConkI,
                   {plus ? Sign::Plus : Sign::Minus, f.operand(0)},
                   {plus ? Sign::Plus : Sign::Minus, f.operand(1)});
      case Conn::Honk:
        if (plus)
          return two(RuleName::PosHonkI, {Sign::Minus, f.operand(0)},
                     {Sign::Plus, f.operand(1)});
        return two(RuleName::NegHonkI, {Sign::Plus, f.operand(0)},
                   {Sign::Minus, f.operand(1)});
      case Conn::Tonk:
        if (plus) return one(RuleName::PosTonkI, {Sign::Plus, f.operand(0)});
        return std::nullopt;
      case Conn::Atom:
        return std::nullopt;
    }
    return std::nullopt;
  }

  std::optional<Deduction> redWrap(const SignedFormula& g, int budget) {
    if (!redOk(g) || budget < 4) return std::nullopt;
    unsigned c = nextLabel++;
    scope.emplace_back(c, star(g));
    Deduction body = goalBot(budget - 1);
    scope.pop_back();
    return Deduction::infer(RuleName::Red, Conclusion::of(g), {c},
                            {std::move(body)});
  }

  // A major premise built with redexBias probability by an introduction or a
  // reductio, planting a redex at the elimination below it.
  Deduction major(const SignedFormula& m, int budget) {
    if (chance(params.redexBias)) {
      if (chance(0.7)) {
        if (auto built = intro(m, budget)) return std::move(*built);
      }
      if (auto built = redWrap(m, budget)) return std::move(*built);
      if (auto built = intro(m, budget)) return std::move(*built);
    }
    return goal(m, budget);
  }

  std::optional<Deduction> detour(const SignedFormula& g, int budget) {
    if (budget < 2) return std::nullopt;
    const Formula& f = g.body;
    bool plus = g.sign == Sign::Plus;
    struct Shape {
      RuleName rule;
      SignedFormula majorSf;
      bool minor;
    };
    std::vector<Shape> shapes;
    Formula x = atom();
    if (plus) {
      shapes.push_back({RuleName::PosAndE1,
                        {Sign::Plus, Formula::binary(Conn::And, f, x)}, false});
      shapes.push_back({RuleName::PosAndE2,
                        {Sign::Plus, Formula::binary(Conn::And, x, f)}, false});
      shapes.push_back({RuleName::NegNotE,
                        {Sign::Minus, Formula::negation(f)}, false});
      if (budget >= 3)
        shapes.push_back({RuleName::PosImpE,
                          {Sign::Plus, Formula::binary(Conn::Imp, x, f)}, true});
      shapes.push_back({RuleName::NegImpE1,
                        {Sign::Minus, Formula::binary(Conn::Imp, f, x)}, false});
      if (params.config.hasConn(Conn::Conk)) {
        shapes.push_back({RuleName::PosConkE1,
                          {Sign::Plus, Formula::binary(Conn::Conk, f, x)}, false});
        shapes.push_back({RuleName::PosConkE2,
                          {Sign::Plus, Formula::binary(Conn::Conk, x, f)}, false});
      }
      if (params.config.hasConn(Conn::Honk)) {
        shapes.push_back({RuleName::NegHonkE1,
                          {Sign::Minus, Formula::binary(Conn::Honk, f, x)}, false});
        shapes.push_back({RuleName::PosHonkE2,
                          {Sign::Plus, Formula::binary(Conn::Honk, x, f)}, false});
      }
      if (params.config.hasConn(Conn::Tonk))
        shapes.push_back({RuleName::TonkE,
                          {Sign::Plus, Formula::binary(Conn::Tonk, x, f)}, false});
    } else {
      shapes.push_back({RuleName::NegOrE1,
                        {Sign::Minus, Formula::binary(Conn::Or, f, x)}, false});
      shapes.push_back({RuleName::NegOrE2,
                        {Sign::Minus, Formula::binary(Conn::Or, x, f)}, false});
      shapes.push_back({RuleName::PosNotE,
                        {Sign::Plus, Formula::negation(f)}, false});
      shapes.push_back({RuleName::NegImpE2,
                        {Sign::Minus, Formula::binary(Conn::Imp, x, f)}, false});
      if (params.config.hasConn(Conn::Conk)) {
        shapes.push_back({RuleName::NegConkE1,
                          {Sign::Minus, Formula::binary(Conn::Conk, f, x)}, false});
        shapes.push_back({RuleName::NegConkE2,
                          {Sign::Minus, Formula::binary(Conn::Conk, x, f)}, false});
      }
      if (params.config.hasConn(Conn::Honk)) {
        shapes.push_back({RuleName::PosHonkE1,
                          {Sign::Plus, Formula::binary(Conn::Honk, f, x)}, false});
        shapes.push_back({RuleName::NegHonkE2,
                          {Sign::Minus, Formula::binary(Conn::Honk, x, f)}, false});
      }
    }
    if (shapes.empty()) return std::nullopt;
    Shape s = shapes[randInt(static_cast<int>(shapes.size()))];
    if (s.minor) {
      std::vector<int> shares = splitBudget(budget, {1, 1});
      Deduction m = major(s.majorSf, shares[0]);
      Deduction minor =
          goal({Sign::Plus, s.majorSf.body.operand(0)}, shares[1]);
      return Deduction::infer(s.rule, Conclusion::of(g), {},
                              {std::move(m), std::move(minor)});
    }
    return Deduction::infer(s.rule, Conclusion::of(g), {},
                            {major(s.majorSf, budget - 1)});
  }

  // A case split whose minor premises conclude the goal, threading fresh
  // assumption classes through both branches.
  std::optional<Deduction> caseSplit(const Conclusion& g, int budget,
                                     const std::function<Deduction(int)>& sub) {
    if (budget < 4 + (g.isAbsurdity() ? 4 : 0)) return std::nullopt;
    bool orSplit = chance(0.5);
    Formula x = atom();
    Formula y = atom();
    Conn comp = orSplit ? Conn::Or : Conn::And;
    SignedFormula majorSf{orSplit ? Sign::Plus : Sign::Minus,
                          Formula::binary(comp, x, y)};
    Sign hypSign = orSplit ? Sign::Plus : Sign::Minus;
    int sub1Min = g.isAbsurdity() ? 3 : 1;
    std::vector<int> shares = splitBudget(budget, {1, sub1Min, sub1Min});
    Deduction m = major(majorSf, shares[0]);
    unsigned c1 = nextLabel++;
    unsigned c2 = nextLabel++;
    scope.emplace_back(c1, SignedFormula{hypSign, x});
    Deduction m1 = sub(shares[1]);
    scope.pop_back();
    scope.emplace_back(c2, SignedFormula{hypSign, y});
    Deduction m2 = sub(shares[2]);
    scope.pop_back();
    return Deduction::infer(orSplit ? RuleName::PosOrE : RuleName::NegAndE, g,
                            {c1, c2},
                            {std::move(m), std::move(m1), std::move(m2)});
  }

  Deduction goal(const SignedFormula& g, int budget) {
    struct Option {
      int weight;
      std::function<std::optional<Deduction>()> run;
    };
    std::vector<Option> options;
    options.push_back({budget <= 2 ? 20 : 2,
                       [&]() -> std::optional<Deduction> { return useHyp(g); }});
    if (g.degree() > 0 && budget >= 2)
      options.push_back({3, [&] { return intro(g, budget); }});
    if (budget >= 4 && redOk(g))
      options.push_back({2, [&] { return redWrap(g, budget); }});
    if (budget >= 2)
      options.push_back({4, [&] { return detour(g, budget); }});
    if (budget >= 4)
      options.push_back({2, [&] {
                           return caseSplit(Conclusion::of(g), budget,
                                            [&](int b) { return goal(g, b); });
                         }});
    while (true) {
      int total = 0;
      for (const Option& o : options) total += o.weight;
      int roll = randInt(total);
      int idx = 0;
      for (; idx < static_cast<int>(options.size()); ++idx) {
        roll -= options[idx].weight;
        if (roll < 0) break;
      }
      if (auto built = options[idx].run()) return std::move(*built);
      options.erase(options.begin() + idx);
    }
  }

  Deduction goalBot(int budget) {
    if (budget >= 8 && chance(0.25)) {
      if (auto split = caseSplit(Conclusion::absurdity(), budget,
                                 [&](int b) { return goalBot(b); }))
        return std::move(*split);
    }
    int depth = params.config.ncMode == Mode::AtomicOnly ? 0 : 2;
    SignedFormula alpha{chance(0.5) ? Sign::Plus : Sign::Minus, formula(depth)};
    std::vector<int> shares = splitBudget(budget, {1, 1});
    Deduction left = goal(alpha, shares[0]);
    Deduction right = goal(star(alpha), shares[1]);
    return Deduction::infer(RuleName::Nc, Conclusion::absurdity(), {},
                            {std::move(left), std::move(right)});
  }
};

}  // namespace

Deduction generate(const GeneratorParams& params) {
  Gen gen(params);
  int budget = params.maxNodes;
  if (budget >= 3 && gen.ncOn() && gen.chance(0.10)) return gen.goalBot(budget);
  SignedFormula root{gen.chance(0.5) ? Sign::Plus : Sign::Minus,
                     gen.formula(budget >= 6 ? 2 : 1)};
  return gen.goal(root, budget);
}

}  // namespace bilat
