#include "derange/gen.hpp"

#include <random>

#include "derange/errors.hpp"
#include "derange/util.hpp"

namespace derange {

CostMatrix gen_instance(int n, std::uint64_t seed, std::int64_t lo, std::int64_t hi) {
  if (n < 3)
    throw RangeError("instance generation needs n >= 3, got " + std::to_string(n));
  if (n > kMaxMatrixSize)
    throw RangeError("instance size exceeds limit " + std::to_string(kMaxMatrixSize));
  if (lo > hi) throw RangeError("empty cost range");
  if (lo < -kMaxAbsCost || hi > kMaxAbsCost)
    throw RangeError("cost range exceeds magnitude cap");
  CostMatrix m(n);
  std::mt19937_64 rng(seed);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      m.set_edge(i, j, draw_in_range(rng, lo, hi));
  return m;
}

}  // namespace derange
