#include "bilat/trace_json.hpp"

#include <json.hpp>

namespace bilat {

namespace {

using json = nlohmann::ordered_json;

json rankJson(const Rank& r) {
  if (r.zero) return json(0);
  return json::array({r.degree, r.count});
}

const char* outcomeToken(Outcome o) {
  switch (o) {
    case Outcome::Normal: return "normal";
    case Outcome::Stuck: return "stuck";
    case Outcome::StepLimit: return "stepLimit";
  }
  return "";
}

}  // namespace

std::string traceToJson(const Trace& trace) {
  json out;
  out["outcome"] = outcomeToken(trace.outcome);
  out["steps"] = json::array();
  for (const StepRecord& s : trace.steps) {
    json step;
    step["index"] = s.index;
    step["kind"] = redexKindToken(s.kind);
    step["subcase"] = s.subcase;
    step["position"] = s.position;
    step["rankBefore"] = rankJson(s.rankBefore);
    step["rankAfter"] = rankJson(s.rankAfter);
    out["steps"].push_back(std::move(step));
  }
  if (trace.outcome == Outcome::Stuck) {
    out["stuckRedexes"] = json::array();
    for (const StuckRedex& s : trace.stuckRedexes) {
      json entry;
      entry["kind"] = redexKindToken(s.kind);
      entry["connective"] = connToken(s.connective);
      entry["position"] = s.position;
      out["stuckRedexes"].push_back(std::move(entry));
    }
  }
  return out.dump();
}

}  // namespace bilat
