#pragma once

#include <random>
#include <vector>

#include "derange/cost_model.hpp"
#include "derange/gen.hpp"
#include "derange/permutation.hpp"
#include "derange/util.hpp"

namespace derange::testing {

// n=3 triangle: cost(1,2)=5, cost(1,3)=2, cost(2,3)=4.
inline CostMatrix t3() {
  CostMatrix m(3);
  m.set_edge(1, 2, 5);
  m.set_edge(1, 3, 2);
  m.set_edge(2, 3, 4);
  return m;
}

// n=4 "dumbbell": two expensive edges and cheap cross edges.
inline CostMatrix w4() {
  CostMatrix m(4);
  m.set_edge(1, 2, 10);
  m.set_edge(3, 4, 10);
  m.set_edge(1, 3, 1);
  m.set_edge(1, 4, 1);
  m.set_edge(2, 3, 1);
  m.set_edge(2, 4, 1);
  return m;
}

inline Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) images[static_cast<std::size_t>(x - 1)] = x;
  for (std::size_t i = images.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(bounded_draw(rng, i));
    std::swap(images[i - 1], images[j]);
  }
  return Permutation(std::move(images));
}

inline Permutation random_derangement(int n, std::mt19937_64& rng,
                                      Mode mode = Mode::Assignment) {
  for (;;) {
    Permutation p = random_permutation(n, rng);
    if (is_derangement(p, mode)) return p;
  }
}

// A random cycle of length >= 2 whose arcs are all valid in dm.
inline CycleForm random_valid_cycle(const DerivedMatrix& dm, std::mt19937_64& rng) {
  const int n = dm.size();
  for (;;) {
    const int k = 2 + static_cast<int>(bounded_draw(rng, static_cast<std::uint64_t>(n - 1)));
    Permutation shuffled = random_permutation(n, rng);
    std::vector<int> cycle(shuffled.image().begin(), shuffled.image().begin() + k);
    bool valid = true;
    for (std::size_t t = 0; t < cycle.size() && valid; ++t)
      if (dm.forbidden(cycle[t], cycle[(t + 1) % cycle.size()])) valid = false;
    if (valid) return canonical_cycle_form(CycleForm{n, {std::move(cycle)}});
  }
}

}  // namespace derange::testing
