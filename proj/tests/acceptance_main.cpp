// Release gate. Runs every shipping criterion and prints one verdict line
// per criterion; the exit code is the number of failures.
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "bilat/generate.hpp"
#include "bilat/normalize.hpp"
#include "bilat/sexpr.hpp"
#include "goldens.hpp"
#include "oracles.hpp"

using namespace bilat;
using Clock = std::chrono::steady_clock;

namespace {

std::string gCorpusDir = "corpus";
int gFailures = 0;

double msSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void verdict(int criterion, bool ok, const std::string& what) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << what << "\n";
  if (!ok) ++gFailures;
}

Deduction loadCorpus(const std::string& name) {
  std::ifstream in(gCorpusDir + "/" + name, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open corpus file " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseDeduction(buf.str());
}

std::vector<std::string> corpusFiles() {
  std::ifstream manifest(gCorpusDir + "/manifest.tsv");
  if (!manifest) throw std::runtime_error("cannot open corpus manifest");
  std::vector<std::string> files;
  std::string line;
  std::getline(manifest, line);  // header
  while (std::getline(manifest, line)) {
    auto tab = line.find('\t');
    if (tab != std::string::npos) files.push_back(line.substr(0, tab));
  }
  return files;
}

// Criterion 1: one passing instance per rule, ten rejected mutants, under a
// second.
void criterion1() {
  auto start = Clock::now();
  int badGoldens = 0;
  for (const goldens::RuleGolden& g : goldens::kRules) {
    SystemConfig cfg = *SystemConfig::preset(g.system);
    if (!check(parseDeduction(g.text), cfg).ok) ++badGoldens;
  }
  int badMutants = 0;
  for (const goldens::Mutant& m : goldens::kMutants) {
    SystemConfig cfg = *SystemConfig::preset(m.system);
    cfg.reductioMode = m.redMode;
    CheckReport report = check(parseDeduction(m.text), cfg);
    bool positioned = false;
    for (const Violation& v : report.violations)
      positioned |= v.kind == m.kind && v.position == m.position;
    if (report.ok || !positioned) ++badMutants;
  }
  double ms = msSince(start);
  std::ostringstream what;
  what << "rule table, " << goldens::kRules.size() << " instances pass and "
       << goldens::kMutants.size() << " mutants fail in position ("
       << static_cast<int>(ms) << " ms)";
  verdict(1, badGoldens == 0 && badMutants == 0 && ms < 1000.0, what.str());
}

// Criterion 2: the four explosion deductions check, analyze to exactly one
// reductio-elimination redex, and stick there under normalize.
void criterion2() {
  auto start = Clock::now();
  struct Explosion {
    const char* file;
    const char* system;
  };
  const Explosion cases[] = {
      {"conk_explosion.bnd", "B+conk"},
      {"conk_explosion_denial.bnd", "B+conk"},
      {"honk_explosion.bnd", "B+honk"},
      {"honk_explosion_denial.bnd", "B+honk"},
  };
  int bad = 0;
  for (const Explosion& e : cases) {
    SystemConfig cfg = *SystemConfig::preset(e.system);
    Deduction d = loadCorpus(e.file);
    if (!check(d, cfg).ok) { ++bad; continue; }
    std::vector<MaximalFormula> occs = maximalOccurrences(d);
    if (occs.size() != 1 || occs[0].kind != RedexKind::RE) { ++bad; continue; }
    NormalizeResult result = normalize(d, cfg);
    if (result.trace.outcome != Outcome::Stuck ||
        result.trace.stuckRedexes.size() != 1 ||
        result.trace.stuckRedexes[0].kind != RedexKind::RE ||
        result.trace.stuckRedexes[0].position != occs[0].position)
      ++bad;
  }
  double ms = msSince(start);
  std::ostringstream what;
  what << "four explosion deductions stick on their single "
          "reductio-elimination redex ("
       << static_cast<int>(ms) << " ms)";
  verdict(2, bad == 0 && ms < 1000.0, what.str());
}

// Criterion 3: the displayed transformations, plus the atomization display,
// match their frozen right-hand sides up to class renaming.
void criterion3() {
  int matches = 0;
  const int wanted = static_cast<int>(goldens::kReductions.size()) + 1;
  for (const goldens::ReductionGolden& g : goldens::kReductions) {
    Deduction d = loadCorpus(g.file);
    auto r = selectRedex(d);
    if (!r || r->kind != g.kind) continue;
    Deduction stepped;
    switch (g.kind) {
      case RedexKind::Perm: stepped = applyPermutative(d, *r); break;
      case RedexKind::RE: stepped = reduceRE(d, *r); break;
      case RedexKind::RNC: stepped = reduceRNC(d, *r); break;
      case RedexKind::INC: stepped = reduceINC(d, *r); break;
      default: stepped = reduceIE(d, *r); break;
    }
    if (isomorphic(stepped, parseDeduction(g.rhs))) ++matches;
  }
  Deduction atomized = atomizeNC(loadCorpus(goldens::kAtomizationLhs));
  if (isomorphic(atomized, parseDeduction(goldens::kAtomizationRhs)))
    ++matches;
  std::ostringstream what;
  what << "golden transformations, " << matches << "/" << wanted
       << " isomorphic matches";
  verdict(3, matches == wanted, what.str());
}

struct NormalizedCase {
  Deduction original;
  NormalizeResult result;
};

std::vector<NormalizedCase> gNormalized;

// Criterion 4: five hundred generated deductions normalize, preserving the
// conclusion and shrinking the open-assumption set at most, inside a minute.
void criterion4() {
  auto start = Clock::now();
  GeneratorParams params;
  params.maxNodes = 30;
  params.redexBias = 1.0;
  int bad = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    params.seed = seed;
    Deduction d = generate(params);
    NormalizeResult result = normalize(d, params.config);
    bool ok = result.trace.outcome == Outcome::Normal &&
              isNormal(result.deduction) &&
              result.deduction.conclusion == d.conclusion;
    if (ok) {
      std::set<SignedFormula> before = openSignedFormulas(d);
      for (const SignedFormula& sf : openSignedFormulas(result.deduction))
        if (!before.count(sf)) ok = false;
    }
    if (!ok) {
      ++bad;
      std::cout << "  criterion 4 counterexample, seed " << seed << ": "
                << print(d) << "\n";
    }
    gNormalized.push_back({std::move(d), std::move(result)});
  }
  double ms = msSince(start);
  std::ostringstream what;
  what << "500 generated deductions normalize with conclusion and "
          "assumptions preserved ("
       << static_cast<int>(ms) << " ms)";
  verdict(4, bad == 0 && ms < 60000.0, what.str());
}

// Criterion 5: the rank decreases lexicographically at every recorded step
// of every criterion-4 trace.
void criterion5() {
  long steps = 0;
  int violations = 0;
  for (const NormalizedCase& c : gNormalized) {
    for (const StepRecord& s : c.result.trace.steps) {
      ++steps;
      if (!(s.rankAfter < s.rankBefore)) ++violations;
    }
  }
  std::ostringstream what;
  what << "rank strictly decreases across " << steps << " recorded steps, "
       << violations << " violations";
  verdict(5, !gNormalized.empty() && violations == 0, what.str());
}

// Criterion 6: every normalized output satisfies the subformula report.
void criterion6() {
  int flagged = 0;
  for (const NormalizedCase& c : gNormalized)
    if (!subformulaReport(c.result.deduction).empty()) ++flagged;
  std::ostringstream what;
  what << "subformula report clean on " << gNormalized.size()
       << " normalized outputs, " << flagged << " flagged";
  verdict(6, !gNormalized.empty() && flagged == 0, what.str());
}

// Criterion 7: the analysis agrees with brute-force re-derivation on small
// generated trees.
void criterion7() {
  GeneratorParams params;
  params.maxNodes = 12;
  params.redexBias = 0.8;
  int disagreements = 0;
  int trees = 0;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    params.seed = seed;
    Deduction d = generate(params);
    ++trees;

    using Occ = std::tuple<RedexKind, Path, std::string, int>;
    std::set<Occ> fast, slow;
    for (const MaximalFormula& m : maximalOccurrences(d))
      fast.insert({m.kind, m.position, print(m.formula), m.effectiveDegree});
    for (const MaximalFormula& m : oracle::bruteMaximal(d))
      slow.insert({m.kind, m.position, print(m.formula), m.effectiveDegree});

    using Seg = std::tuple<std::vector<Path>, std::string, bool, int>;
    std::set<Seg> fastSegs, slowSegs;
    for (const Segment& s : segments(d))
      fastSegs.insert(
          {s.positions, print(s.formula), s.maximal, s.effectiveDegree});
    for (const Segment& s : oracle::bruteSegments(d))
      slowSegs.insert(
          {s.positions, print(s.formula), s.maximal, s.effectiveDegree});

    if (fast != slow || fastSegs != slowSegs ||
        rank(d) != oracle::bruteRank(d)) {
      ++disagreements;
      if (disagreements == 1)
        std::cout << "  criterion 7 counterexample, seed " << seed << ": "
                  << print(d) << "\n";
    }
  }
  std::ostringstream what;
  what << "fast analysis agrees with brute-force re-derivation on " << trees
       << " trees, " << disagreements << " disagreements";
  verdict(7, trees >= 2000 && disagreements == 0, what.str());
}

// Criterion 8: atomization outputs check under the atomic restriction and
// preserve conclusion and open assumptions.
void criterion8() {
  GeneratorParams params;
  params.maxNodes = 25;
  params.redexBias = 0.7;
  SystemConfig atomic = SystemConfig::presetB();
  atomic.ncMode = Mode::AtomicOnly;
  int found = 0;
  int bad = 0;
  for (std::uint64_t seed = 0; found < 100 && seed < 100000; ++seed) {
    params.seed = seed;
    Deduction d = generate(params);
    bool compoundNc = false;
    forEachNode(d, [&](const Deduction& n, const Path&) {
      if (n.rule != RuleName::Nc) return;
      const Conclusion& c = n.premises[0].conclusion;
      if (c.isSigned() && c.degree() > 0) compoundNc = true;
    });
    if (!compoundNc) continue;
    ++found;
    Deduction expanded = atomizeNC(d);
    if (!check(expanded, atomic).ok ||
        expanded.conclusion != d.conclusion ||
        openSignedFormulas(expanded) != openSignedFormulas(d))
      ++bad;
  }
  std::ostringstream what;
  what << "atomization of " << found
       << " compound-nc deductions checks under the atomic restriction, "
       << bad << " failures";
  verdict(8, found == 100 && bad == 0, what.str());
}

// Criterion 9: parse/print round-trips are exact on the corpus and on
// generated trees.
void criterion9() {
  int bad = 0;
  int total = 0;
  for (const std::string& file : corpusFiles()) {
    ++total;
    Deduction d = loadCorpus(file);
    if (parseDeduction(print(d)) != d) ++bad;
  }
  GeneratorParams params;
  params.maxNodes = 30;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    params.seed = seed;
    ++total;
    Deduction d = generate(params);
    if (parseDeduction(print(d)) != d) ++bad;
  }
  std::ostringstream what;
  what << "parse/print round-trip exact on " << total << " deductions, "
       << bad << " failures";
  verdict(9, total >= 1000 && bad == 0, what.str());
}

void runCriterion(int n, void (*fn)()) {
  try {
    fn();
  } catch (const std::exception& e) {
    verdict(n, false, std::string("aborted: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) gCorpusDir = argv[1];
  runCriterion(1, criterion1);
  runCriterion(2, criterion2);
  runCriterion(3, criterion3);
  runCriterion(4, criterion4);
  runCriterion(5, criterion5);
  runCriterion(6, criterion6);
  runCriterion(7, criterion7);
  runCriterion(8, criterion8);
  runCriterion(9, criterion9);
  return gFailures;
}
