#pragma once

#include <optional>
#include <set>
#include <string_view>

#include "bilat/formula.hpp"

namespace bilat {

enum class RuleName {
  Hyp,
  PosAndI, PosAndE1, PosAndE2,
  NegAndI1, NegAndI2, NegAndE,
  PosOrI1, PosOrI2, PosOrE,
  NegOrI, NegOrE1, NegOrE2,
  PosImpI, PosImpE,
  NegImpI, NegImpE1, NegImpE2,
  PosNotI, PosNotE,
  NegNotI, NegNotE,
  Red, Nc,
  PosTonkI, TonkE,
  PosConkI, PosConkE1, PosConkE2,
  NegConkI, NegConkE1, NegConkE2,
  PosHonkI, PosHonkE1, PosHonkE2,
  NegHonkI, NegHonkE1, NegHonkE2,
};

struct RuleInfo {
  RuleName rule;
  const char* token;
  int arity;           // premise count
  int dischargeSlots;  // length of the discharge list
  bool intro;
  bool elim;
  Conn conn;           // Conn::Atom for red and nc
};

const RuleInfo& ruleInfo(RuleName r);
std::optional<RuleName> ruleFromToken(std::string_view token);

inline bool isIntro(RuleName r) { return ruleInfo(r).intro; }
inline bool isElim(RuleName r) { return ruleInfo(r).elim; }
inline bool isCoordination(RuleName r) { return r == RuleName::Red || r == RuleName::Nc; }

// Premise index whose subtree a discharge slot binds into.
int dischargePremise(RuleName r, int slot);

enum class Mode { General, AtomicOnly, Disabled };

struct SystemConfig {
  std::set<Conn> connectives;
  Mode reductioMode = Mode::General;
  Mode ncMode = Mode::General;

  bool hasConn(Conn c) const { return c == Conn::Atom || connectives.count(c) > 0; }

  static SystemConfig presetB();
  // Recognized names: B, B+tonk, B+conk, B+honk, B-coord.
  static std::optional<SystemConfig> preset(std::string_view name);
};

}  // namespace bilat
