#include <doctest.h>

#include <random>

#include "derange/errors.hpp"
#include "derange/improve.hpp"
#include "helpers.hpp"

using namespace derange;
using derange::testing::t3;
using derange::testing::w4;

TEST_CASE("apply_cycle composes and validates") {
  CHECK(apply_cycle(from_mapping({2, 1, 4, 3}), {4, {{1, 3, 2, 4}}},
                    Mode::Assignment) == from_mapping({4, 3, 1, 2}));
  CHECK(cycle_decomposition(from_mapping({4, 3, 1, 2})) ==
        CycleForm{4, {{1, 4, 2, 3}}});

  const Permutation d = from_mapping({2, 3, 1});
  CHECK(apply_cycle(d, {3, {}}, Mode::Assignment) == d);
  CHECK_THROWS_AS(apply_cycle(d, {3, {{1, 2}}}, Mode::Assignment),
                  CreatesFixedPoint);

  // rerouting 2 and 6 of the 6-cycle leaves the 2-cycle (1 2)
  const Permutation six = from_mapping({2, 3, 4, 5, 6, 1});
  CHECK(apply_cycle(six, {6, {{2, 6}}}, Mode::Assignment) ==
        from_mapping({2, 1, 4, 5, 6, 3}));
  CHECK_THROWS_AS(apply_cycle(six, {6, {{2, 6}}}, Mode::TwoFactor),
                  CreatesTwoCycle);
}

TEST_CASE("apply_first_valid skips mode-violating candidates") {
  const Permutation six = from_mapping({2, 3, 4, 5, 6, 1});
  const CostMatrix m = gen_instance(6, 5, 1, 9);
  const DerivedMatrix dm = derived_matrix(m, six);
  std::vector<NegativeCycle> candidates;
  candidates.push_back({CycleForm{6, {{2, 6}}}, -1, 0, Provenance::ClosedAtSource});
  candidates.push_back({CycleForm{6, {{1, 3, 5}}}, -1, 0, Provenance::ClosedAtSource});

  Permutation out = six;
  const auto picked = apply_first_valid(six, candidates, Mode::TwoFactor, 16, out);
  REQUIRE(picked.has_value());
  CHECK(*picked == 1);
  CHECK(is_derangement(out, Mode::TwoFactor));

  // a retry budget of one stops after the first, rejected candidate
  Permutation untouched = six;
  CHECK_FALSE(apply_first_valid(six, candidates, Mode::TwoFactor, 1, untouched));
}

TEST_CASE("improve solves the dumbbell instance in one step") {
  ImproveConfig cfg;
  cfg.oracle_check = true;
  const ImprovementTrace trace = improve(w4(), from_mapping({2, 1, 4, 3}), cfg);
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].cost == 40);
  REQUIRE(trace.steps[0].cycle.has_value());
  CHECK(*trace.steps[0].cycle == CycleForm{4, {{1, 3, 2, 4}}});
  CHECK(*trace.steps[0].weight == -36);
  CHECK_FALSE(trace.steps[1].cycle.has_value());
  CHECK(trace.final == from_mapping({4, 3, 1, 2}));
  CHECK(trace.final_cost == 4);
  CHECK(trace.status == TraceStatus::OracleCertifiedOptimal);
  CHECK(trace.oracle_optimum == 4);
}

TEST_CASE("improve terminates immediately on the triangle") {
  ImproveConfig cfg;
  cfg.oracle_check = true;
  const ImprovementTrace trace = improve(t3(), from_cycles({3, {{1, 2, 3}}}), cfg);
  REQUIRE(trace.steps.size() == 1);
  CHECK_FALSE(trace.steps[0].cycle.has_value());
  CHECK(trace.final_cost == 11);
  CHECK(trace.status == TraceStatus::OracleCertifiedOptimal);
}

TEST_CASE("improve with first policy takes smaller steps") {
  ImproveConfig cfg;
  cfg.engine.policy = CyclePolicy::First;
  cfg.oracle_check = true;
  const ImprovementTrace trace = improve(w4(), from_mapping({2, 1, 4, 3}), cfg);
  REQUIRE(trace.steps.size() == 3);
  CHECK(trace.steps[0].cost == 40);
  CHECK(*trace.steps[0].weight == -18);
  CHECK(trace.steps[1].cost == 22);
  CHECK(*trace.steps[1].weight == -18);
  CHECK(trace.final_cost == 4);
  CHECK(trace.status == TraceStatus::OracleCertifiedOptimal);
}

TEST_CASE("improve leaves an all-equal instance untouched") {
  CostMatrix m(5);
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) m.set_edge(i, j, 4);
  const ImprovementTrace trace = improve(m, canonical_start(5), ImproveConfig{});
  REQUIRE(trace.steps.size() == 1);
  CHECK_FALSE(trace.steps[0].cycle.has_value());
  CHECK(trace.final == canonical_start(5));
}

TEST_CASE("improve rejects invalid starts") {
  CHECK_THROWS_AS(improve(t3(), Permutation::identity(3), ImproveConfig{}),
                  InvalidStart);
  ImproveConfig two_factor;
  two_factor.mode = Mode::TwoFactor;
  CHECK_THROWS_AS(improve(w4(), from_mapping({2, 1, 4, 3}), two_factor),
                  InvalidStart);
}

TEST_CASE("iteration cap is reported") {
  ImproveConfig cfg;
  cfg.engine.policy = CyclePolicy::First;
  cfg.max_iter = 1;
  const ImprovementTrace trace = improve(w4(), from_mapping({2, 1, 4, 3}), cfg);
  CHECK(trace.status == TraceStatus::IterationCap);
  CHECK(trace.steps.size() == 1);
  CHECK(trace.final_cost == 22);
}

TEST_CASE("canonical_start is the n-cycle") {
  CHECK(canonical_start(4) == from_mapping({2, 3, 4, 1}));
  CHECK(is_derangement(canonical_start(3), Mode::TwoFactor));
  CHECK_THROWS_AS(canonical_start(1), InvalidStart);
}

TEST_CASE("traces decrease strictly and account exactly") {
  std::mt19937_64 rng(131);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + static_cast<int>(bounded_draw(rng, 5));  // 4..8
    const CostMatrix m = gen_instance(n, rng(), -50, 50);
    for (const Mode mode : {Mode::Assignment, Mode::TwoFactor}) {
      ImproveConfig cfg;
      cfg.mode = mode;
      const Permutation d0 = testing::random_derangement(n, rng, mode);
      const ImprovementTrace trace = improve(m, d0, cfg);
      REQUIRE_FALSE(trace.steps.empty());
      for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& step = trace.steps[i];
        const Permutation d(step.mapping);
        CHECK(is_derangement(d, mode));
        CHECK(permutation_cost(m, d) == step.cost);
        if (i > 0) {
          CHECK(step.cost < trace.steps[i - 1].cost);
          CHECK(step.cost ==
                trace.steps[i - 1].cost + *trace.steps[i - 1].weight);
        }
      }
      CHECK(trace.final_cost == permutation_cost(m, trace.final));
      CHECK(trace.status == TraceStatus::EngineFixedPoint);
    }
  }
}
