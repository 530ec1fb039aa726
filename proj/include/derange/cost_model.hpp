#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "derange/permutation.hpp"

namespace derange {

// Entries are capped so that any n-term sum of costs or deltas fits
// comfortably in a signed 64-bit accumulator.
inline constexpr std::int64_t kMaxAbsCost = 2147483647;
inline constexpr int kMaxMatrixSize = 2048;

// Square integer cost matrix with an unreadable diagonal. Instance files are
// symmetric by contract; symmetry is validated at load time, not on every
// programmatic write, because the derived-matrix formula reads directed
// entries and must not depend on it.
class CostMatrix {
 public:
  explicit CostMatrix(int n);

  int size() const { return n_; }

  // Requires i != j; the diagonal is never readable.
  std::int64_t cost(int i, int j) const;

  // Sets one directed entry.
  void set_cost(int i, int j, std::int64_t value);

  // Sets both directions of an undirected edge.
  void set_edge(int i, int j, std::int64_t value);

 private:
  void check_indices(int i, int j) const;

  int n_;
  std::vector<std::int64_t> cost_;
};

// Instance format: line 1 is n, lines 2..n+1 hold n whitespace-separated
// integers each. Diagonal tokens are accepted but ignored.
CostMatrix load_matrix(std::string_view text);
std::string emit_matrix(const CostMatrix& m);

// Unordered vertex pairs with multiplicity.
class EdgeSet {
 public:
  void add(int a, int b);
  bool contains(int a, int b) const;
  int multiplicity(int a, int b) const;
  std::size_t distinct_count() const { return edges_.size(); }
  std::size_t total_count() const { return total_; }
  bool all_distinct() const { return edges_.size() == total_; }
  const std::map<std::pair<int, int>, int>& entries() const { return edges_; }

 private:
  std::map<std::pair<int, int>, int> edges_;
  std::size_t total_ = 0;
};

// Sum of cost[x][p(x)]. Requires p to be fixed-point free; a 2-cycle
// contributes its edge cost twice.
std::int64_t permutation_cost(const CostMatrix& m, const Permutation& p);

// The undirected edges {x, p(x)} with multiplicity. p is edge-distinct iff
// all multiplicities are 1, which holds iff p has no 2-cycle.
EdgeSet edge_set(const Permutation& p);

// Matrix whose entry (i, j) is the cost change of rerouting i's assignment
// from D(i) to D(j). Entries with j == i or D(j) == i are forbidden: taking
// them would hand some point its own vertex back. Forbidden entries are a
// distinguished state, never a large finite value, and never participate in
// sums.
class DerivedMatrix {
 public:
  DerivedMatrix(const CostMatrix& m, Permutation d);

  int size() const { return n_; }
  bool forbidden(int i, int j) const;

  // Throws ForbiddenArc on a forbidden entry.
  std::int64_t delta(int i, int j) const;

  // nullopt where forbidden.
  std::optional<std::int64_t> entry(int i, int j) const;

  const Permutation& base() const { return base_; }
  const Permutation& base_inverse() const { return base_inverse_; }

 private:
  std::size_t index(int i, int j) const;

  int n_;
  Permutation base_;
  Permutation base_inverse_;
  std::vector<std::int64_t> delta_;
  std::vector<char> forbidden_;
};

// Requires d to be fixed-point free (assignment-mode derangement).
DerivedMatrix derived_matrix(const CostMatrix& m, const Permutation& d);

// Sum of delta along the arcs of a single cycle, including the closing arc.
// Throws ForbiddenArc if the cycle traverses a forbidden entry.
std::int64_t cycle_weight(const DerivedMatrix& dm, const CycleForm& c);

// One text row per matrix row; forbidden entries render as "x".
std::string render_derived(const DerivedMatrix& dm);

}  // namespace derange
