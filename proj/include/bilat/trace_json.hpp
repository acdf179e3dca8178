#pragma once

#include <string>

#include "bilat/normalize.hpp"

namespace bilat {

// Compact JSON rendering of a normalization trace:
//   {"outcome":"normal","steps":[{"index":0,"kind":"ie","subcase":"imp",
//    "position":[0],"rankBefore":[2,3],"rankAfter":0}]}
// A zero rank is the number 0. Stuck traces carry a "stuckRedexes" array.
std::string traceToJson(const Trace& trace);

}  // namespace bilat
