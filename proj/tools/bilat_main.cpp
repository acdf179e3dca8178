#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "bilat/analysis.hpp"
#include "bilat/check.hpp"
#include "bilat/generate.hpp"
#include "bilat/normalize.hpp"
#include "bilat/sexpr.hpp"
#include "bilat/trace_json.hpp"

namespace {

using bilat::Mode;
using bilat::SystemConfig;

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;

struct ConfigFlags {
  std::string system = "B";
  std::string nc;
  std::string red;
};

void addConfigFlags(CLI::App* cmd, ConfigFlags& flags) {
  cmd->add_option("--system", flags.system,
                  "rule system: B, B+tonk, B+conk, B+honk, or B-coord")
      ->default_val("B");
  cmd->add_option("--nc", flags.nc,
                  "restrict the incoherence rule: general, atomic, or off");
  cmd->add_option("--red", flags.red,
                  "restrict reductio: general, atomic, or off");
}

Mode parseMode(const std::string& text) {
  if (text == "general") return Mode::General;
  if (text == "atomic") return Mode::AtomicOnly;
  if (text == "off") return Mode::Disabled;
  throw CLI::ValidationError("mode must be general, atomic, or off");
}

SystemConfig resolveConfig(const ConfigFlags& flags) {
  std::optional<SystemConfig> cfg = SystemConfig::preset(flags.system);
  if (!cfg) throw CLI::ValidationError("unknown system: " + flags.system);
  if (!flags.nc.empty()) cfg->ncMode = parseMode(flags.nc);
  if (!flags.red.empty()) cfg->reductioMode = parseMode(flags.red);
  return *cfg;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    std::exit(kExitBadInput);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bilat::Deduction parseOrExit(const std::string& path) {
  std::string text = readFile(path);
  try {
    return bilat::parseDeduction(text);
  } catch (const bilat::ParseError& e) {
    std::cerr << path << ": parse error at byte " << e.span.start << ": "
              << e.what() << "\n";
    std::exit(kExitBadInput);
  }
}

int reportViolations(const bilat::CheckReport& report) {
  for (const bilat::Violation& v : report.violations) {
    std::cerr << "violation at " << bilat::print(v.position) << ": "
              << bilat::violationKindToken(v.kind) << " ("
              << bilat::ruleInfo(v.rule).token << "): " << v.message << "\n";
  }
  return kExitRejected;
}

int runCheck(const std::string& path, const SystemConfig& cfg) {
  bilat::Deduction d = parseOrExit(path);
  bilat::CheckReport report = bilat::check(d, cfg);
  if (!report.ok) return reportViolations(report);
  std::cout << "ok: " << bilat::print(d.conclusion) << "\n";
  return kExitOk;
}

nlohmann::ordered_json rankJson(const bilat::Rank& r) {
  if (r.zero) return nlohmann::ordered_json(0);
  return nlohmann::ordered_json::array({r.degree, r.count});
}

int runAnalyze(const std::string& path, const SystemConfig& cfg, bool asJson) {
  bilat::Deduction d = parseOrExit(path);
  bilat::CheckReport report = bilat::check(d, cfg);
  if (!report.ok) return reportViolations(report);

  std::vector<bilat::MaximalFormula> occs = bilat::maximalOccurrences(d);
  std::vector<bilat::Segment> segs = bilat::segments(d);
  std::erase_if(segs, [](const bilat::Segment& s) { return !s.maximal; });
  bilat::Rank rk = bilat::rank(d);

  if (asJson) {
    nlohmann::ordered_json out;
    out["maximalFormulas"] = nlohmann::ordered_json::array();
    for (const bilat::MaximalFormula& m : occs) {
      nlohmann::ordered_json entry;
      entry["kind"] = bilat::redexKindToken(m.kind);
      entry["position"] = m.position;
      entry["formula"] = bilat::print(m.formula);
      entry["effectiveDegree"] = m.effectiveDegree;
      out["maximalFormulas"].push_back(std::move(entry));
    }
    out["maximalSegments"] = nlohmann::ordered_json::array();
    for (const bilat::Segment& s : segs) {
      nlohmann::ordered_json entry;
      entry["positions"] = s.positions;
      entry["formula"] = bilat::print(s.formula);
      entry["length"] = s.length();
      entry["effectiveDegree"] = s.effectiveDegree;
      out["maximalSegments"].push_back(std::move(entry));
    }
    out["rank"] = rankJson(rk);
    out["normal"] = bilat::isNormal(d);
    std::cout << out.dump() << "\n";
    return kExitOk;
  }

  for (const bilat::MaximalFormula& m : occs)
    std::cout << bilat::redexKindToken(m.kind) << " redex at "
              << bilat::print(m.position) << ": " << bilat::print(m.formula)
              << " (effective degree " << m.effectiveDegree << ")\n";
  for (const bilat::Segment& s : segs) {
    std::cout << "maximal segment of length " << s.length() << " ending at "
              << bilat::print(s.bottom()) << ": " << bilat::print(s.formula)
              << " (effective degree " << s.effectiveDegree << ")\n";
  }
  if (rk.zero)
    std::cout << "rank 0, normal\n";
  else
    std::cout << "rank <" << rk.degree << "," << rk.count << ">"
              << (bilat::isNormal(d) ? ", normal" : "") << "\n";
  return kExitOk;
}

int runNormalize(const std::string& path, const SystemConfig& cfg,
                 int maxSteps, const std::string& tracePath) {
  bilat::Deduction d = parseOrExit(path);
  bilat::CheckReport report = bilat::check(d, cfg);
  if (!report.ok) return reportViolations(report);

  bilat::NormalizeResult result = bilat::normalize(d, cfg, maxSteps);
  if (!tracePath.empty()) {
    std::ofstream out(tracePath, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << tracePath << "\n";
      return kExitBadInput;
    }
    out << bilat::traceToJson(result.trace) << "\n";
  }
  switch (result.trace.outcome) {
    case bilat::Outcome::Normal:
      std::cout << bilat::print(result.deduction) << "\n";
      return kExitOk;
    case bilat::Outcome::Stuck:
      for (const bilat::StuckRedex& s : result.trace.stuckRedexes)
        std::cerr << "stuck: " << bilat::redexKindToken(s.kind) << " redex on "
                  << bilat::connToken(s.connective) << " at "
                  << bilat::print(s.position) << "\n";
      return kExitRejected;
    case bilat::Outcome::StepLimit:
      std::cerr << "step limit of " << maxSteps << " reached after "
                << result.trace.steps.size() << " steps\n";
      return kExitRejected;
  }
  return kExitInternal;
}

int runAtomize(const std::string& path, const SystemConfig& cfg) {
  bilat::Deduction d = parseOrExit(path);
  bilat::CheckReport report = bilat::check(d, cfg);
  if (!report.ok) return reportViolations(report);
  try {
    std::cout << bilat::print(bilat::atomizeNC(d)) << "\n";
    return kExitOk;
  } catch (const bilat::UnsupportedConnective& e) {
    std::cerr << "cannot atomize: " << e.what() << "\n";
    return kExitRejected;
  }
}

int runGenerate(const bilat::GeneratorParams& params) {
  std::cout << bilat::print(bilat::generate(params)) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"proof checker and normalizer for signed natural deduction"};
  app.require_subcommand(1);

  ConfigFlags checkFlags, analyzeFlags, normalizeFlags, atomizeFlags;
  std::string checkFile, analyzeFile, normalizeFile, atomizeFile;
  bool analyzeJson = false;
  int maxSteps = 100000;
  std::string tracePath;

  CLI::App* checkCmd = app.add_subcommand("check", "check a deduction file");
  checkCmd->add_option("file", checkFile, "deduction file")->required();
  addConfigFlags(checkCmd, checkFlags);

  CLI::App* analyzeCmd =
      app.add_subcommand("analyze", "locate maximal formulas and segments");
  analyzeCmd->add_option("file", analyzeFile, "deduction file")->required();
  analyzeCmd->add_flag("--json", analyzeJson, "machine-readable output");
  addConfigFlags(analyzeCmd, analyzeFlags);

  CLI::App* normalizeCmd =
      app.add_subcommand("normalize", "rewrite a deduction to normal form");
  normalizeCmd->add_option("file", normalizeFile, "deduction file")->required();
  normalizeCmd->add_option("--max-steps", maxSteps, "step budget")
      ->default_val(100000);
  normalizeCmd->add_option("--trace-json", tracePath,
                           "write the reduction trace to this file");
  addConfigFlags(normalizeCmd, normalizeFlags);

  CLI::App* atomizeCmd = app.add_subcommand(
      "atomize", "expand incoherence steps down to atomic formulas");
  atomizeCmd->add_option("file", atomizeFile, "deduction file")->required();
  addConfigFlags(atomizeCmd, atomizeFlags);

  bilat::GeneratorParams genParams;
  std::string genSystem = "B";
  CLI::App* generateCmd =
      app.add_subcommand("generate", "emit a random valid deduction");
  generateCmd->add_option("--seed", genParams.seed, "random seed")->required();
  generateCmd->add_option("--max-nodes", genParams.maxNodes, "node budget")
      ->required();
  generateCmd->add_option("--redex-bias", genParams.redexBias,
                          "probability of planting a redex at each detour")
      ->default_val(0.5);
  generateCmd->add_option("--system", genSystem, "rule system")
      ->default_val("B");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (checkCmd->parsed()) return runCheck(checkFile, resolveConfig(checkFlags));
    if (analyzeCmd->parsed())
      return runAnalyze(analyzeFile, resolveConfig(analyzeFlags), analyzeJson);
    if (normalizeCmd->parsed())
      return runNormalize(normalizeFile, resolveConfig(normalizeFlags),
                          maxSteps, tracePath);
    if (atomizeCmd->parsed())
      return runAtomize(atomizeFile, resolveConfig(atomizeFlags));
    if (generateCmd->parsed()) {
      std::optional<SystemConfig> cfg = SystemConfig::preset(genSystem);
      if (!cfg) {
        std::cerr << "unknown system: " << genSystem << "\n";
        return kExitBadInput;
      }
      genParams.config = *cfg;
      return runGenerate(genParams);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  } catch (const bilat::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitBadInput;
}
