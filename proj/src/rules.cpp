#include "bilat/rules.hpp"

#include <array>

namespace bilat {

namespace {

constexpr std::array<RuleInfo, 38> kRules = {{
    {RuleName::Hyp, "hyp", 0, 0, false, false, Conn::Atom},
    {RuleName::PosAndI, "+andI", 2, 0, true, false, Conn::And},
    {RuleName::PosAndE1, "+andE1", 1, 0, false, true, Conn::And},
    {RuleName::PosAndE2, "+andE2", 1, 0, false, true, Conn::And},
    {RuleName::NegAndI1, "-andI1", 1, 0, true, false, Conn::And},
    {RuleName::NegAndI2, "-andI2", 1, 0, true, false, Conn::And},
    {RuleName::NegAndE, "-andE", 3, 2, false, true, Conn::And},
    {RuleName::PosOrI1, "+orI1", 1, 0, true, false, Conn::Or},
    {RuleName::PosOrI2, "+orI2", 1, 0, true, false, Conn::Or},
    {RuleName::PosOrE, "+orE", 3, 2, false, true, Conn::Or},
    {RuleName::NegOrI, "-orI", 2, 0, true, false, Conn::Or},
    {RuleName::NegOrE1, "-orE1", 1, 0, false, true, Conn::Or},
    {RuleName::NegOrE2, "-orE2", 1, 0, false, true, Conn::Or},
    {RuleName::PosImpI, "+impI", 1, 1, true, false, Conn::Imp},
    {RuleName::PosImpE, "+impE", 2, 0, false, true, Conn::Imp},
    {RuleName::NegImpI, "-impI", 2, 0, true, false, Conn::Imp},
    {RuleName::NegImpE1, "-impE1", 1, 0, false, true, Conn::Imp},
    {RuleName::NegImpE2, "-impE2", 1, 0, false, true, Conn::Imp},
    {RuleName::PosNotI, "+notI", 1, 0, true, false, Conn::Not},
    {RuleName::PosNotE, "+notE", 1, 0, false, true, Conn::Not},
    {RuleName::NegNotI, "-notI", 1, 0, true, false, Conn::Not},
    {RuleName::NegNotE, "-notE", 1, 0, false, true, Conn::Not},
    {RuleName::Red, "red", 1, 1, false, false, Conn::Atom},
    {RuleName::Nc, "nc", 2, 0, false, false, Conn::Atom},
    {RuleName::PosTonkI, "+tonkI", 1, 0, true, false, Conn::Tonk},
    {RuleName::TonkE, "tonkE", 1, 0, false, true, Conn::Tonk},
    {RuleName::PosConkI, "+conkI", 2, 0, true, false, Conn::Conk},
    {RuleName::PosConkE1, "+conkE1", 1, 0, false, true, Conn::Conk},
    {RuleName::PosConkE2, "+conkE2", 1, 0, false, true, Conn::Conk},
    {RuleName::NegConkI, "-conkI", 2, 0, true, false, Conn::Conk},
    {RuleName::NegConkE1, "-conkE1", 1, 0, false, true, Conn::Conk},
    {RuleName::NegConkE2, "-conkE2", 1, 0, false, true, Conn::Conk},
    {RuleName::PosHonkI, "+honkI", 2, 0, true, false, Conn::Honk},
    {RuleName::PosHonkE1, "+honkE1", 1, 0, false, true, Conn::Honk},
    {RuleName::PosHonkE2, "+honkE2", 1, 0, false, true, Conn::Honk},
    {RuleName::NegHonkI, "-honkI", 2, 0, true, false, Conn::Honk},
    {RuleName::NegHonkE1, "-honkE1", 1, 0, false, true, Conn::Honk},
    {RuleName::NegHonkE2, "-honkE2", 1, 0, false, true, Conn::Honk},
}};

}  // namespace

const RuleInfo& ruleInfo(RuleName r) {
  return kRules[static_cast<std::size_t>(r)];
}

std::optional<RuleName> ruleFromToken(std::string_view token) {
  for (const RuleInfo& info : kRules)
    if (token == info.token) return info.rule;
  return std::nullopt;
}

int dischargePremise(RuleName r, int slot) {
  switch (r) {
    case RuleName::PosOrE:
    case RuleName::NegAndE:
      return slot + 1;  // minors follow the major premise
    case RuleName::PosImpI:
    case RuleName::Red:
      return 0;
    default:
      return -1;
  }
}

SystemConfig SystemConfig::presetB() {
  SystemConfig cfg;
  cfg.connectives = {Conn::And, Conn::Or, Conn::Imp, Conn::Not};
  return cfg;
}

std::optional<SystemConfig> SystemConfig::preset(std::string_view name) {
  SystemConfig cfg = presetB();
  if (name == "B") return cfg;
  if (name == "B+tonk") {
    cfg.connectives.insert(Conn::Tonk);
    return cfg;
  }
  if (name == "B+conk") {
    cfg.connectives.insert(Conn::Conk);
    return cfg;
  }
  if (name == "B+honk") {
    cfg.connectives.insert(Conn::Honk);
    return cfg;
  }
  if (name == "B-coord") {
    cfg.reductioMode = Mode::Disabled;
    cfg.ncMode = Mode::Disabled;
    return cfg;
  }
  return std::nullopt;
}

}  // namespace bilat
