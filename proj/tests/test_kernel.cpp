#include <doctest.h>

#include <string>
#include <vector>

#include "bilat/check.hpp"
#include "bilat/sexpr.hpp"
#include "goldens.hpp"
#include "oracles.hpp"

using namespace bilat;

namespace {

SystemConfig configFor(const char* name) {
  auto cfg = SystemConfig::preset(name);
  REQUIRE(cfg.has_value());
  return *cfg;
}

}  // namespace

TEST_CASE("every rule has a passing instance") {
  for (const goldens::RuleGolden& g : goldens::kRules) {
    CAPTURE(g.text);
    CheckReport report = check(parseDeduction(g.text), configFor(g.system));
    CHECK(report.ok);
    CHECK(report.violations.empty());
  }
}

TEST_CASE("mutants fail with a positioned violation of the expected kind") {
  for (const goldens::Mutant& m : goldens::kMutants) {
    CAPTURE(m.text);
    SystemConfig cfg = configFor(m.system);
    cfg.reductioMode = m.redMode;
    CheckReport report = check(parseDeduction(m.text), cfg);
    REQUIRE_FALSE(report.ok);
    bool found = false;
    for (const Violation& v : report.violations)
      found |= v.kind == m.kind && v.position == m.position;
    CHECK(found);
  }
}

TEST_CASE("restriction modes gate the coordination rules") {
  SystemConfig atomicNc = configFor("B");
  atomicNc.ncMode = Mode::AtomicOnly;
  Deduction compound = parseDeduction(
      "(nc bot () (hyp 1 (+ (or C D))) (hyp 2 (- (or C D))))");
  CHECK_FALSE(check(compound, atomicNc).ok);
  CHECK(check(compound, configFor("B")).ok);

  SystemConfig noCoord = configFor("B-coord");
  CHECK_FALSE(check(compound, noCoord).ok);
  CHECK_FALSE(
      check(parseDeduction("(red (+ A) (1) (nc bot () (hyp 2 (+ A)) (hyp 1 (- "
                           "A))))"),
            noCoord)
          .ok);
}

TEST_CASE("open assumptions are the undischarged classes with counts") {
  Deduction d = parseDeduction(
      "(+impI (+ (imp A A)) (1) (+orE (+ A) (2 3) (hyp 4 (+ (or A B))) (hyp 1 "
      "(+ A)) (hyp 1 (+ A))))");
  REQUIRE(check(d, configFor("B")).ok);
  auto open = openAssumptions(d);
  REQUIRE(open.size() == 1);
  CHECK(open.count(4) == 1);
  CHECK(open.at(4).formula == SignedFormula{Sign::Plus, parseFormula("(or A B)")});
  CHECK(open.at(4).occurrences == 1);
  auto sfs = openSignedFormulas(d);
  CHECK(sfs.size() == 1);
}

TEST_CASE("hypothesis substitution grafts a derivation onto a class") {
  Deduction host = parseDeduction("(+andI (+ (and A A)) () (hyp 1 (+ A)) (hyp 1 (+ A)))");
  Deduction repl = parseDeduction("(+andE1 (+ A) () (hyp 5 (+ (and A C))))");
  Deduction result = substituteHypotheses(host, 1, repl);
  CHECK(check(result, configFor("B")).ok);
  CHECK(result.conclusion == host.conclusion);
  CHECK(openAssumptions(result).count(1) == 0);
  CHECK_FALSE(oracle::hasDuplicateDischarge(result));
}

TEST_CASE("substituting a binder-bearing replacement twice keeps labels disjoint") {
  Deduction host = parseDeduction("(+andI (+ (and A A)) () (hyp 1 (+ A)) (hyp 1 (+ A)))");
  Deduction repl = parseDeduction(
      "(red (+ A) (2) (nc bot () (hyp 3 (+ A)) (hyp 2 (- A))))");
  Deduction result = substituteHypotheses(host, 1, repl);
  CHECK(check(result, configFor("B")).ok);
  CHECK_FALSE(oracle::hasDuplicateDischarge(result));
}

TEST_CASE("hypothesis substitution rejects bad inputs") {
  Deduction bound = parseDeduction("(+impI (+ (imp A A)) (1) (hyp 1 (+ A)))");
  Deduction replA = parseDeduction("(hyp 9 (+ A))");
  CHECK_THROWS_AS(substituteHypotheses(bound, 1, replA), std::invalid_argument);

  Deduction host = parseDeduction("(+notI (+ (not A)) () (hyp 1 (- A)))");
  CHECK_THROWS_AS(substituteHypotheses(host, 1, replA), std::invalid_argument);

  Deduction untouched = substituteHypotheses(host, 7, replA);
  CHECK(untouched == host);
}
