#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "derange/cost_model.hpp"
#include "derange/engine.hpp"
#include "derange/permutation.hpp"

namespace derange {

// engine-fixed-point is the engine's heuristic verdict; only the oracle
// statuses carry certainty.
enum class TraceStatus {
  EngineFixedPoint,
  OracleCertifiedOptimal,
  OracleRefuted,
  IterationCap,
};

std::string to_string(TraceStatus status);
TraceStatus parse_status(std::string_view text);

struct ImproveConfig {
  Mode mode = Mode::Assignment;
  EngineConfig engine;
  int max_iter = 1000;
  int retry_limit = 16;
  bool oracle_check = false;
  int oracle_limit = 9;
};

struct TraceStep {
  int index = 0;
  std::vector<int> mapping;  // the current permutation, one image per point
  std::int64_t cost = 0;
  std::optional<CycleForm> cycle;  // absent on the terminal record
  std::optional<std::int64_t> weight;
  long long columns_used = 0;  // engine columns spent during this step
};

struct ImprovementTrace {
  int n = 0;
  ImproveConfig config;
  std::vector<TraceStep> steps;
  Permutation final;
  std::int64_t final_cost = 0;
  TraceStatus status = TraceStatus::EngineFixedPoint;
  long long total_columns = 0;
  std::optional<std::int64_t> oracle_optimum;
};

// compose(d, from_cycles(c)); the result must stay a valid derangement for
// the mode. An empty cycle form leaves d unchanged.
Permutation apply_cycle(const Permutation& d, const CycleForm& c, Mode mode);

// Applies the first candidate that keeps the mode valid, trying at most
// retry_limit of them. Returns the accepted candidate's index, or nullopt.
std::optional<std::size_t> apply_first_valid(const Permutation& d,
                                             const std::vector<NegativeCycle>& candidates,
                                             Mode mode, int retry_limit,
                                             Permutation& out);

// The canonical n-cycle (1 2 ... n), the default start.
Permutation canonical_start(int n);

// The outer loop: find a negative cycle in the derived matrix, compose it
// in, rebuild, and stop when no admissible cycle is found or max_iter is
// reached. The engine restarts from every vertex, so a single bad
// determining vertex cannot stall the search by itself. Each accepted step
// is cross-checked: the exact cost decrease must equal the reported cycle
// weight.
ImprovementTrace improve(const CostMatrix& m, const Permutation& d0,
                         const ImproveConfig& cfg);

}  // namespace derange
