#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "derange/cost_model.hpp"
#include "derange/permutation.hpp"

namespace derange {

// Unit of search work: one candidate-endpoint examination during path
// extension. Monotonically non-decreasing over a search.
struct ColumnCounter {
  long long columns = 0;
  void bump() { ++columns; }
};

enum class CyclePolicy { First, Best };

std::string to_string(CyclePolicy policy);
CyclePolicy parse_policy(std::string_view text);

enum class Provenance { ClosedAtSource, ExtractedFromNonsimple, Exhaustive };

std::string to_string(Provenance provenance);

struct EngineConfig {
  CyclePolicy policy = CyclePolicy::Best;
  // Labels retained per (source, endpoint) cell, ordered by value. Dominance
  // by value alone is unsound here: a worse-valued path may carry compatible
  // edges that the better one lacks.
  int labels_per_cell = 4;
  // Drop partial paths whose running value is >= 0.
  bool prune_nonnegative = true;
  // Traverse only arcs with a strictly negative entry, as if the
  // non-negative entries were deleted from the derived matrix. Off by
  // default; negative cycles may pass through non-negative arcs.
  bool negative_arcs_only = false;
  // Permit one revisit of an interior vertex and extract the enclosed cycle
  // instead of requiring closure at the source.
  bool non_simple = false;
  // Maximum number of distinct cycles to report.
  std::size_t candidate_cap = 1;
};

// A path under construction in the derived graph. `new_edges` holds the
// undirected cost-matrix edges {x, D(y)} created by its arcs (x, y); every
// retained path keeps distinct-new-edge count equal to its arc count.
class SearchPath {
 public:
  static SearchPath seed(int source, int n);

  // Builds the bookkeeping (value, new edges) for an explicit vertex
  // sequence; throws ForbiddenArc if an arc is forbidden. Admissibility is
  // not checked.
  static SearchPath from_vertices(const DerivedMatrix& dm, std::vector<int> vertices);

  // Appends vertex `a`; bookkeeping only, no admissibility check.
  SearchPath extended(const DerivedMatrix& dm, int a) const;

  int source() const { return vertices_.front(); }
  int endpoint() const { return vertices_.back(); }
  const std::vector<int>& vertices() const { return vertices_; }
  int arc_count() const { return static_cast<int>(vertices_.size()) - 1; }
  std::int64_t value() const { return value_; }
  const EdgeSet& new_edges() const { return new_edges_; }

  bool visits(int v) const;
  bool has_arc(int u, int v) const;

 private:
  SearchPath() = default;

  std::vector<int> vertices_;
  std::vector<std::uint64_t> visited_;  // bitset over vertices 1..n
  std::int64_t value_ = 0;
  EdgeSet new_edges_;
};

// The admissibility predicate for adjoining arc (endpoint, a) to path q,
// where D is the derived matrix's base and e = {endpoint, D(a)} is the
// cost-matrix edge the new arc would create. True iff all of:
//   (s) a is not an interior vertex of q; a == source is allowed only as
//       cycle closure;
//   (1) if e is an edge of D (equivalently D(D(a)) == endpoint), then D(a)
//       is a vertex of q, so the path reroutes D(a) and the old edge goes
//       away;
//   (2) the arc (D(a), D^-1(endpoint)) is not an arc of q — that arc is the
//       only earlier arc that could have created e;
//   (e) e is not already among q's new edges.
// Throws ForbiddenArc if the candidate arc itself is forbidden.
bool admissible_extension(const SearchPath& q, const DerivedMatrix& dm, int a);

// Cycle-level admissibility: composing the cycle into the base permutation
// keeps new edges distinct from each other and from the base edges that
// survive. This is what closure-found cycles satisfy by construction and
// what extracted cycles must be checked against.
bool cycle_admissible(const DerivedMatrix& dm, const CycleForm& c);

struct NegativeCycle {
  CycleForm cycle;  // canonical single cycle
  std::int64_t weight = 0;
  long long columns_used = 0;  // counter snapshot at discovery
  Provenance provenance = Provenance::ClosedAtSource;
};

// A non-simple discovery: the search revisited an interior vertex and the
// segment between the two occurrences is a negative cycle.
struct NonSimpleEvent {
  std::vector<int> path;  // full vertex sequence ending in the revisit
  CycleForm cycle;
  std::int64_t weight = 0;
};

struct IterationRecord {
  int source = 0;
  int iteration = 0;
  long long extensions_attempted = 0;
  long long labels_retained = 0;
  long long columns_cumulative = 0;
};

// Per-iteration table of retained paths per (source, endpoint) cell. Stores
// only paths with at least one arc; every stored path has arc count <= the
// current iteration number.
class PathMatrix {
 public:
  static PathMatrix initial(const DerivedMatrix& dm, EngineConfig cfg);
  static PathMatrix initial(const DerivedMatrix& dm, EngineConfig cfg,
                            std::vector<int> sources);

  int size() const { return n_; }
  int iteration() const { return iteration_; }
  const EngineConfig& config() const { return cfg_; }
  const std::vector<int>& sources() const { return sources_; }

  const std::vector<SearchPath>& labels(int source, int endpoint) const;
  std::size_t label_count() const;
  bool frontier_empty() const;

  // Validated discoveries and instrumentation accumulated so far.
  const std::vector<NegativeCycle>& found() const { return found_; }
  const std::vector<NonSimpleEvent>& events() const { return events_; }
  const std::vector<IterationRecord>& trace() const { return trace_; }

  friend PathMatrix extend_iteration(PathMatrix pm, const DerivedMatrix& dm,
                                     ColumnCounter& counter);

 private:
  PathMatrix() = default;
  std::size_t source_slot(int source) const;

  int n_ = 0;
  int iteration_ = 0;
  EngineConfig cfg_;
  std::vector<int> sources_;
  // cells_[slot][endpoint - 1], labels sorted by (value, vertex sequence)
  std::vector<std::vector<std::vector<SearchPath>>> cells_;
  std::vector<NegativeCycle> found_;
  std::vector<NonSimpleEvent> events_;
  std::vector<IterationRecord> trace_;
};

// One round of the search: every frontier path is offered every candidate
// column in ascending vertex order; each scanned candidate costs one column.
// Admissible extensions (negative-valued ones, when pruning is on) enter the
// next matrix under the K-best-per-cell policy; closures at the source and,
// in non-simple mode, interior revisits are recorded as discoveries.
PathMatrix extend_iteration(PathMatrix pm, const DerivedMatrix& dm,
                            ColumnCounter& counter);

struct SearchResult {
  std::vector<NegativeCycle> cycles;  // policy-ordered, deduplicated
  std::vector<NonSimpleEvent> events;
  std::vector<IterationRecord> trace;
  long long columns_total = 0;
};

// Runs the iterative extension, at most n iterations per source, sources
// ascending. Policy "first" orders candidates by discovery, "best" by
// (weight, canonical form); at most cfg.candidate_cap distinct cycles are
// returned. Finding nothing is a heuristic verdict, not a proof.
SearchResult search_negative_cycles(const DerivedMatrix& dm, const EngineConfig& cfg);

std::optional<NegativeCycle> find_negative_cycle(const DerivedMatrix& dm,
                                                 const EngineConfig& cfg);

// The cycle between the two occurrences of the unique repeated vertex, which
// must be the endpoint's repeat. Canonicalized (min-vertex rotation). The
// ground-set size is taken to be the largest vertex present.
CycleForm extract_cycle(const std::vector<int>& path);

// Instrumented replay: walks the vertex sequence, scanning candidate columns
// 1..target at every step (one column each), and returns the columns spent.
// Throws ForbiddenArc if the walk uses a forbidden arc.
long long forced_walk_columns(const DerivedMatrix& dm, const std::vector<int>& walk);

}  // namespace derange
