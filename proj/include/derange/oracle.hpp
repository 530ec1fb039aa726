#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "derange/cost_model.hpp"
#include "derange/engine.hpp"
#include "derange/permutation.hpp"

namespace derange {

inline constexpr int kDefaultOracleLimit = 9;

struct OracleResult {
  std::int64_t optimum_value = 0;
  std::variant<Permutation, CycleForm> witness;
  long long instances_examined = 0;
};

// Exact minimum of permutation_cost over all permutations valid for the
// mode, by enumeration of all n! permutations. Ties keep the
// lexicographically smallest witness. Requires n <= limit.
OracleResult min_derangement(const CostMatrix& m, Mode mode,
                             int limit = kDefaultOracleLimit);

// Depth-first enumeration of all simple cycles over non-forbidden arcs.
// Two-factor mode filters by the cycle admissibility predicate (the same
// implementation the engine validates its finds with); assignment mode is
// predicate-free, which makes its verdict the classical cycle-canceling
// optimality certificate. Returns the minimum-weight negative cycle, ties to
// the lexicographically smallest canonical cycle; absence is a proof.
std::optional<NegativeCycle> exhaustive_negative_cycle(
    const DerivedMatrix& dm, Mode mode, int limit = kDefaultOracleLimit);

// Exact minimum Hamiltonian cycle cost by enumeration of the (n-1)!/2
// undirected tours. Requires 3 <= n <= limit and a symmetric matrix.
OracleResult min_tour(const CostMatrix& m, int limit = kDefaultOracleLimit);

}  // namespace derange
