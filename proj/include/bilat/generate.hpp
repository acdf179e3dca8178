#pragma once

#include <cstdint>

#include "bilat/check.hpp"

namespace bilat {

struct GeneratorParams {
  std::uint64_t seed = 0;
  int maxNodes = 20;
  // Probability that a derivation detours through an introduction consumed
  // by an elimination or non-contradiction.
  double redexBias = 0.5;
  SystemConfig config = SystemConfig::presetB();
};

// Deterministic per seed. The result always passes check under params.config.
Deduction generate(const GeneratorParams& params);

}  // namespace bilat
