#include "derange/improve.hpp"

#include <numeric>

#include "derange/errors.hpp"
#include "derange/oracle.hpp"

namespace derange {

std::string to_string(TraceStatus status) {
  switch (status) {
    case TraceStatus::EngineFixedPoint: return "engine-fixed-point";
    case TraceStatus::OracleCertifiedOptimal: return "oracle-certified-optimal";
    case TraceStatus::OracleRefuted: return "oracle-refuted";
    case TraceStatus::IterationCap: return "iteration-cap";
  }
  throw InternalError("unknown trace status");
}

TraceStatus parse_status(std::string_view text) {
  if (text == "engine-fixed-point") return TraceStatus::EngineFixedPoint;
  if (text == "oracle-certified-optimal") return TraceStatus::OracleCertifiedOptimal;
  if (text == "oracle-refuted") return TraceStatus::OracleRefuted;
  if (text == "iteration-cap") return TraceStatus::IterationCap;
  throw InputError("unknown trace status: " + std::string(text));
}

Permutation apply_cycle(const Permutation& d, const CycleForm& c, Mode mode) {
  if (c.cycles.empty()) return d;
  validate_cycle_form(c);
  if (c.cycles.size() != 1)
    throw InvalidCycle("apply_cycle expects at most one cycle");
  if (c.n != d.size())
    throw SizeMismatch("cycle over " + std::to_string(c.n) +
                       " points vs permutation of size " +
                       std::to_string(d.size()));
  if (!is_derangement(d, Mode::Assignment))
    throw FixedPointCost("base permutation has a fixed point");
  Permutation result = compose(d, from_cycles(c));
  if (!is_derangement(result, Mode::Assignment))
    throw CreatesFixedPoint("composition creates a fixed point");
  if (mode == Mode::TwoFactor && !is_derangement(result, Mode::TwoFactor))
    throw CreatesTwoCycle("composition creates a 2-cycle");
  return result;
}

std::optional<std::size_t> apply_first_valid(const Permutation& d,
                                             const std::vector<NegativeCycle>& candidates,
                                             Mode mode, int retry_limit,
                                             Permutation& out) {
  const std::size_t tries =
      std::min<std::size_t>(candidates.size(),
                            retry_limit < 0 ? 0 : static_cast<std::size_t>(retry_limit));
  for (std::size_t i = 0; i < tries; ++i) {
    try {
      out = apply_cycle(d, candidates[i].cycle, mode);
      return i;
    } catch (const CreatesFixedPoint&) {
    } catch (const CreatesTwoCycle&) {
    }
  }
  return std::nullopt;
}

Permutation canonical_start(int n) {
  if (n < 2) throw InvalidStart("no derangement exists for n = " + std::to_string(n));
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int x = 1; x < n; ++x) images[static_cast<std::size_t>(x - 1)] = x + 1;
  images[static_cast<std::size_t>(n - 1)] = 1;
  return Permutation(std::move(images));
}

ImprovementTrace improve(const CostMatrix& m, const Permutation& d0,
                         const ImproveConfig& cfg) {
  if (m.size() != d0.size())
    throw SizeMismatch("matrix size " + std::to_string(m.size()) +
                       " vs start permutation size " + std::to_string(d0.size()));
  if (cfg.max_iter < 1 || cfg.retry_limit < 1)
    throw InputError("max_iter and retry_limit must be positive");
  if (!is_derangement(d0, cfg.mode))
    throw InvalidStart("start permutation is not a valid " +
                       to_string(cfg.mode) + " derangement");

  ImprovementTrace trace{m.size(), cfg, {}, d0, 0,
                         TraceStatus::EngineFixedPoint, 0, std::nullopt};
  Permutation current = d0;
  std::int64_t current_cost = permutation_cost(m, current);
  bool capped = false;

  for (int step = 0;; ++step) {
    if (step >= cfg.max_iter) {
      capped = true;
      break;
    }
    DerivedMatrix dm = derived_matrix(m, current);
    EngineConfig engine_cfg = cfg.engine;
    engine_cfg.candidate_cap = static_cast<std::size_t>(cfg.retry_limit);
    SearchResult found = search_negative_cycles(dm, engine_cfg);
    trace.total_columns += found.columns_total;

    Permutation next = current;
    const auto accepted =
        apply_first_valid(current, found.cycles, cfg.mode, cfg.retry_limit, next);
    if (!accepted) {
      trace.steps.push_back({step, current.image(), current_cost, std::nullopt,
                             std::nullopt, found.columns_total});
      break;
    }
    const NegativeCycle& cycle = found.cycles[*accepted];
    const std::int64_t next_cost = permutation_cost(m, next);
    if (cycle.weight >= 0 || next_cost != current_cost + cycle.weight)
      throw InternalError("step accounting mismatch: cost " +
                          std::to_string(current_cost) + " + weight " +
                          std::to_string(cycle.weight) + " != " +
                          std::to_string(next_cost));
    trace.steps.push_back({step, current.image(), current_cost, cycle.cycle,
                           cycle.weight, found.columns_total});
    current = std::move(next);
    current_cost = next_cost;
  }

  trace.final = current;
  trace.final_cost = current_cost;
  trace.status = capped ? TraceStatus::IterationCap : TraceStatus::EngineFixedPoint;
  if (cfg.oracle_check && m.size() <= cfg.oracle_limit && !capped) {
    const OracleResult optimum = min_derangement(m, cfg.mode, cfg.oracle_limit);
    trace.oracle_optimum = optimum.optimum_value;
    if (trace.final_cost < optimum.optimum_value)
      throw InternalError("final cost beats the exhaustive optimum");
    trace.status = trace.final_cost == optimum.optimum_value
                       ? TraceStatus::OracleCertifiedOptimal
                       : TraceStatus::OracleRefuted;
  }
  return trace;
}

}  // namespace derange
