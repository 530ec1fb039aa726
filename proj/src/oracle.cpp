#include "derange/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "derange/errors.hpp"

namespace derange {

namespace {

void check_limit(int n, int limit, const char* what) {
  if (n > limit)
    throw InputError(std::string(what) + ": size " + std::to_string(n) +
                     " exceeds enumeration limit " + std::to_string(limit));
}

}  // namespace

OracleResult min_derangement(const CostMatrix& m, Mode mode, int limit) {
  const int n = m.size();
  check_limit(n, limit, "min_derangement");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::optional<std::int64_t> best;
  std::vector<int> best_images;
  long long examined = 0;
  do {
    bool valid = true;
    for (int x = 1; x <= n && valid; ++x) {
      const int y = images[static_cast<std::size_t>(x - 1)];
      if (y == x) valid = false;
      if (mode == Mode::TwoFactor && valid &&
          images[static_cast<std::size_t>(y - 1)] == x)
        valid = false;
    }
    if (!valid) continue;
    ++examined;
    std::int64_t cost = 0;
    for (int x = 1; x <= n; ++x)
      cost += m.cost(x, images[static_cast<std::size_t>(x - 1)]);
    if (!best || cost < *best) {  // enumeration is lexicographic, first wins
      best = cost;
      best_images = images;
    }
  } while (std::next_permutation(images.begin(), images.end()));
  if (!best)
    throw InputError("no " + to_string(mode) + " derangement exists for n = " +
                     std::to_string(n));
  return OracleResult{*best, Permutation(std::move(best_images)), examined};
}

std::optional<NegativeCycle> exhaustive_negative_cycle(const DerivedMatrix& dm,
                                                       Mode mode, int limit) {
  const int n = dm.size();
  check_limit(n, limit, "exhaustive_negative_cycle");

  std::optional<NegativeCycle> best;
  long long arcs_examined = 0;
  std::vector<int> path;
  std::vector<char> on_path(static_cast<std::size_t>(n) + 1, 0);

  auto consider = [&](std::int64_t weight) {
    if (weight >= 0) return;
    CycleForm cycle{n, {path}};  // starts at its smallest vertex already
    if (mode == Mode::TwoFactor && !cycle_admissible(dm, cycle)) return;
    if (!best || weight < best->weight ||
        (weight == best->weight &&
         cycle.cycles.front() < best->cycle.cycles.front()))
      best = NegativeCycle{std::move(cycle), weight, arcs_examined,
                           Provenance::Exhaustive};
  };

  // Each directed simple cycle is enumerated exactly once: the start vertex
  // is the cycle's smallest, and only larger vertices may join the path.
  auto dfs = [&](auto&& self, int u, std::int64_t value) -> void {
    const int start = path.front();
    for (int v = 1; v <= n; ++v) {
      ++arcs_examined;
      if (dm.forbidden(u, v)) continue;
      const std::int64_t next = value + dm.delta(u, v);
      if (v == start) {
        if (path.size() >= 2) consider(next);
        continue;
      }
      if (v < start || on_path[static_cast<std::size_t>(v)]) continue;
      path.push_back(v);
      on_path[static_cast<std::size_t>(v)] = 1;
      self(self, v, next);
      on_path[static_cast<std::size_t>(v)] = 0;
      path.pop_back();
    }
  };

  for (int s = 1; s <= n; ++s) {
    path.assign(1, s);
    on_path.assign(static_cast<std::size_t>(n) + 1, 0);
    on_path[static_cast<std::size_t>(s)] = 1;
    dfs(dfs, s, 0);
  }
  return best;
}

OracleResult min_tour(const CostMatrix& m, int limit) {
  const int n = m.size();
  if (n < 3) throw InputError("min_tour needs n >= 3");
  check_limit(n, limit, "min_tour");
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 2);
  std::optional<std::int64_t> best;
  std::vector<int> best_tour;
  long long examined = 0;
  do {
    // one representative per undirected tour: second vertex below the last
    if (rest.front() > rest.back()) continue;
    ++examined;
    std::int64_t cost = m.cost(1, rest.front());
    for (std::size_t t = 0; t + 1 < rest.size(); ++t)
      cost += m.cost(rest[t], rest[t + 1]);
    cost += m.cost(rest.back(), 1);
    if (!best || cost < *best) {
      best = cost;
      best_tour = rest;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::vector<int> cycle;
  cycle.reserve(static_cast<std::size_t>(n));
  cycle.push_back(1);
  cycle.insert(cycle.end(), best_tour.begin(), best_tour.end());
  return OracleResult{*best, CycleForm{n, {std::move(cycle)}}, examined};
}

}  // namespace derange
