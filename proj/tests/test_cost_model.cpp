#include <doctest.h>

#include <random>

#include "derange/cost_model.hpp"
#include "derange/errors.hpp"
#include "helpers.hpp"

using namespace derange;
using derange::testing::t3;
using derange::testing::w4;

TEST_CASE("load_matrix reads the plain format") {
  const CostMatrix m = load_matrix("3\n0 5 2\n5 0 4\n2 4 0");
  CHECK(m.size() == 3);
  CHECK(m.cost(1, 2) == 5);
  CHECK(m.cost(1, 3) == 2);
  CHECK(m.cost(2, 3) == 4);

  CHECK(load_matrix("1\n0").size() == 1);
  // diagonal tokens are ignored, whatever they hold
  CHECK(load_matrix("2\n9 3\n3 7").cost(2, 1) == 3);
}

TEST_CASE("load_matrix rejects malformed input") {
  CHECK_THROWS_AS(load_matrix(""), ParseError);
  CHECK_THROWS_AS(load_matrix("2\n0 1\n1"), ParseError);
  CHECK_THROWS_AS(load_matrix("2\n0 1\n1 0\n5"), ParseError);
  CHECK_THROWS_AS(load_matrix("0\n"), ParseError);
  CHECK_THROWS_WITH_AS(load_matrix("2\n0 5\n6 0"),
                       "cost(1, 2) = 5 but cost(2, 1) = 6", AsymmetryError);
}

TEST_CASE("emit_matrix round trips") {
  const std::string text = "3\n0 5 2\n5 0 4\n2 4 0\n";
  CHECK(emit_matrix(load_matrix(text)) == text);
}

TEST_CASE("permutation_cost") {
  CHECK(permutation_cost(t3(), from_cycles({3, {{1, 2, 3}}})) == 11);
  CHECK(permutation_cost(w4(), from_mapping({2, 1, 4, 3})) == 40);
  CHECK_THROWS_AS(permutation_cost(t3(), Permutation::identity(3)), FixedPointCost);
}

TEST_CASE("edge_set tracks multiplicity") {
  const EdgeSet doubled = edge_set(from_mapping({2, 1, 4, 3}));
  CHECK(doubled.multiplicity(1, 2) == 2);
  CHECK(doubled.multiplicity(3, 4) == 2);
  CHECK(doubled.distinct_count() == 2);
  CHECK_FALSE(doubled.all_distinct());

  const EdgeSet triangle = edge_set(from_cycles({3, {{1, 2, 3}}}));
  CHECK(triangle.distinct_count() == 3);
  CHECK(triangle.all_distinct());

  const EdgeSet square = edge_set(from_cycles({4, {{1, 4, 2, 3}}}));
  CHECK(square.multiplicity(1, 4) == 1);
  CHECK(square.multiplicity(2, 4) == 1);
  CHECK(square.multiplicity(2, 3) == 1);
  CHECK(square.multiplicity(1, 3) == 1);
  CHECK(square.all_distinct());

  CHECK_THROWS_AS(edge_set(from_mapping({1, 3, 2})), FixedPointCost);
}

TEST_CASE("derived_matrix entries and forbidden pattern") {
  const DerivedMatrix dm = derived_matrix(t3(), from_cycles({3, {{1, 2, 3}}}));
  CHECK(dm.delta(1, 2) == -3);
  CHECK(dm.delta(2, 3) == 1);
  CHECK(dm.delta(3, 1) == 2);
  CHECK(dm.forbidden(1, 3));
  CHECK(dm.forbidden(2, 1));
  CHECK(dm.forbidden(3, 2));
  for (int i = 1; i <= 3; ++i) CHECK(dm.forbidden(i, i));
  CHECK_THROWS_AS(dm.delta(1, 3), ForbiddenArc);
  CHECK(dm.entry(1, 3) == std::nullopt);

  const DerivedMatrix dw = derived_matrix(w4(), from_mapping({2, 1, 4, 3}));
  CHECK(dw.delta(1, 3) == -9);
  CHECK(dw.delta(3, 2) == -9);
  CHECK(dw.delta(2, 4) == -9);
  CHECK(dw.delta(4, 1) == -9);

  CHECK_THROWS_AS(derived_matrix(t3(), Permutation::identity(3)), FixedPointCost);
}

TEST_CASE("forbidden placement matches its definition") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(bounded_draw(rng, 8));
    const CostMatrix m = gen_instance(n, rng(), -30, 30);
    const Permutation d = testing::random_derangement(n, rng);
    const DerivedMatrix dm = derived_matrix(m, d);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        CHECK(dm.forbidden(i, j) == (j == i || d(j) == i));
  }
}

TEST_CASE("cycle_weight sums arc deltas") {
  const DerivedMatrix dt = derived_matrix(t3(), from_cycles({3, {{1, 2, 3}}}));
  CHECK(cycle_weight(dt, {3, {{1, 2, 3}}}) == 0);

  const DerivedMatrix dw = derived_matrix(w4(), from_mapping({2, 1, 4, 3}));
  CHECK(cycle_weight(dw, {4, {{1, 3, 2, 4}}}) == -36);

  // arc (2, 1) reroutes 2 onto its own point
  CHECK_THROWS_AS(cycle_weight(dt, {3, {{1, 2}}}), ForbiddenArc);
  CHECK_THROWS_AS(cycle_weight(dt, {3, {{1, 2}, {3, 4}}}), InputError);
}

TEST_CASE("derived matrix reads directed entries, not symmetry") {
  CostMatrix m(3);
  m.set_cost(1, 2, 5);
  m.set_cost(2, 1, 7);  // deliberately asymmetric
  m.set_cost(1, 3, 2);
  m.set_cost(3, 1, 9);
  m.set_cost(2, 3, 4);
  m.set_cost(3, 2, 6);
  const DerivedMatrix dm = derived_matrix(m, from_cycles({3, {{1, 2, 3}}}));
  CHECK(dm.delta(1, 2) == 2 - 5);
  CHECK(dm.delta(2, 3) == 7 - 4);
  CHECK(dm.delta(3, 1) == 6 - 9);
}

TEST_CASE("telescoping identity on random instances") {
  std::mt19937_64 rng(23);
  int checked = 0;
  while (checked < 1000) {
    const int n = 4 + static_cast<int>(bounded_draw(rng, 9));  // 4..12
    const CostMatrix m = gen_instance(n, rng(), -50, 50);
    const Permutation d = testing::random_derangement(n, rng);
    const DerivedMatrix dm = derived_matrix(m, d);
    const CycleForm c = testing::random_valid_cycle(dm, rng);
    const Permutation composed = compose(d, from_cycles(c));
    REQUIRE(is_derangement(composed, Mode::Assignment));
    CHECK(permutation_cost(m, composed) - permutation_cost(m, d) ==
          cycle_weight(dm, c));
    ++checked;
  }
}
