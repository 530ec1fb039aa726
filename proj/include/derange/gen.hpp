#pragma once

#include <cstdint>

#include "derange/cost_model.hpp"

namespace derange {

// Deterministic random symmetric instance: the upper triangle is drawn from
// [lo, hi] and mirrored. The same (n, seed, lo, hi) always yields a
// byte-identical file on every platform. Requires n >= 3.
CostMatrix gen_instance(int n, std::uint64_t seed, std::int64_t lo, std::int64_t hi);

}  // namespace derange
