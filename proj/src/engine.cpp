#include "derange/engine.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "derange/errors.hpp"

namespace derange {

std::string to_string(CyclePolicy policy) {
  return policy == CyclePolicy::First ? "first" : "best";
}

CyclePolicy parse_policy(std::string_view text) {
  if (text == "first") return CyclePolicy::First;
  if (text == "best") return CyclePolicy::Best;
  throw InputError("unknown policy: " + std::string(text));
}

std::string to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::ClosedAtSource: return "closed-at-source";
    case Provenance::ExtractedFromNonsimple: return "extracted-from-nonsimple";
    case Provenance::Exhaustive: return "exhaustive";
  }
  throw InternalError("unknown provenance");
}

SearchPath SearchPath::seed(int source, int n) {
  if (source < 1 || source > n)
    throw VertexOutOfRange("source " + std::to_string(source) +
                           " out of range 1.." + std::to_string(n));
  SearchPath path;
  path.vertices_.push_back(source);
  path.visited_.assign(static_cast<std::size_t>(n + 63) / 64, 0);
  path.visited_[static_cast<std::size_t>(source - 1) / 64] |=
      std::uint64_t{1} << ((source - 1) % 64);
  return path;
}

SearchPath SearchPath::from_vertices(const DerivedMatrix& dm,
                                     std::vector<int> vertices) {
  if (vertices.empty()) throw InputError("path needs at least one vertex");
  SearchPath path = seed(vertices.front(), dm.size());
  for (std::size_t t = 1; t < vertices.size(); ++t)
    path = path.extended(dm, vertices[t]);
  return path;
}

SearchPath SearchPath::extended(const DerivedMatrix& dm, int a) const {
  SearchPath out = *this;
  out.value_ += dm.delta(endpoint(), a);  // throws ForbiddenArc
  out.new_edges_.add(endpoint(), dm.base()(a));
  out.vertices_.push_back(a);
  out.visited_[static_cast<std::size_t>(a - 1) / 64] |=
      std::uint64_t{1} << ((a - 1) % 64);
  return out;
}

bool SearchPath::visits(int v) const {
  const std::size_t slot = static_cast<std::size_t>(v - 1) / 64;
  if (v < 1 || slot >= visited_.size()) return false;
  return (visited_[slot] >> ((v - 1) % 64)) & 1;
}

bool SearchPath::has_arc(int u, int v) const {
  for (std::size_t t = 0; t + 1 < vertices_.size(); ++t)
    if (vertices_[t] == u && vertices_[t + 1] == v) return true;
  return false;
}

namespace {

// Conditions (1), (2) and (e) of the extension predicate; simplicity is the
// caller's concern so that closures and non-simple revisits can share this.
bool passes_edge_conditions(const SearchPath& q, const DerivedMatrix& dm, int a) {
  const Permutation& base = dm.base();
  const int c = q.endpoint();
  const int da = base(a);
  // (1) the new edge {c, D(a)} is a base edge exactly when D(D(a)) == c; it
  // may only be re-created if the path reroutes D(a), removing the old copy.
  if (base(da) == c && !q.visits(da)) return false;
  // (2) the only earlier arc that could have created the same edge.
  if (q.has_arc(da, dm.base_inverse()(c))) return false;
  // (e) direct membership check against the path's edge set.
  if (q.new_edges().contains(c, da)) return false;
  return true;
}

void insert_k_best(std::vector<SearchPath>& cell, SearchPath&& child, int k) {
  auto before = [](const SearchPath& a, const SearchPath& b) {
    if (a.value() != b.value()) return a.value() < b.value();
    return a.vertices() < b.vertices();
  };
  auto pos = std::upper_bound(cell.begin(), cell.end(), child, before);
  if (static_cast<int>(cell.size()) < k) {
    cell.insert(pos, std::move(child));
    return;
  }
  if (pos == cell.end()) return;
  cell.insert(pos, std::move(child));
  cell.pop_back();
}

}  // namespace

bool admissible_extension(const SearchPath& q, const DerivedMatrix& dm, int a) {
  if (dm.forbidden(q.endpoint(), a))
    throw ForbiddenArc("candidate arc (" + std::to_string(q.endpoint()) + ", " +
                       std::to_string(a) + ") is forbidden");
  if (q.visits(a) && a != q.source()) return false;  // (s)
  return passes_edge_conditions(q, dm, a);
}

bool cycle_admissible(const DerivedMatrix& dm, const CycleForm& c) {
  validate_cycle_form(c);
  if (c.cycles.size() != 1)
    throw InvalidCycle("cycle_admissible expects exactly one cycle");
  if (c.n != dm.size())
    throw SizeMismatch("cycle over " + std::to_string(c.n) +
                       " points vs derived matrix of size " +
                       std::to_string(dm.size()));
  const auto& cycle = c.cycles.front();
  const Permutation& base = dm.base();
  std::vector<char> in_cycle(static_cast<std::size_t>(dm.size()) + 1, 0);
  for (int v : cycle) in_cycle[static_cast<std::size_t>(v)] = 1;
  EdgeSet new_edges;
  for (std::size_t t = 0; t < cycle.size(); ++t) {
    const int x = cycle[t];
    const int y = cycle[(t + 1) % cycle.size()];
    if (dm.forbidden(x, y))
      throw ForbiddenArc("cycle arc (" + std::to_string(x) + ", " +
                         std::to_string(y) + ") is forbidden");
    const int dy = base(y);
    if (new_edges.contains(x, dy)) return false;
    new_edges.add(x, dy);
    // {x, dy} is a base edge iff base(dy) == x; it survives composition
    // unless dy itself is rerouted by the cycle.
    if (base(dy) == x && !in_cycle[static_cast<std::size_t>(dy)]) return false;
  }
  return true;
}

PathMatrix PathMatrix::initial(const DerivedMatrix& dm, EngineConfig cfg) {
  std::vector<int> sources(static_cast<std::size_t>(dm.size()));
  for (int s = 1; s <= dm.size(); ++s) sources[static_cast<std::size_t>(s - 1)] = s;
  return initial(dm, cfg, std::move(sources));
}

PathMatrix PathMatrix::initial(const DerivedMatrix& dm, EngineConfig cfg,
                               std::vector<int> sources) {
  if (cfg.labels_per_cell < 1) throw InputError("labels per cell must be >= 1");
  PathMatrix pm;
  pm.n_ = dm.size();
  pm.cfg_ = cfg;
  std::set<int> seen;
  for (int s : sources) {
    if (s < 1 || s > pm.n_)
      throw VertexOutOfRange("source " + std::to_string(s) + " out of range");
    if (!seen.insert(s).second)
      throw InputError("duplicate source " + std::to_string(s));
  }
  pm.sources_ = std::move(sources);
  pm.cells_.assign(pm.sources_.size(),
                   std::vector<std::vector<SearchPath>>(
                       static_cast<std::size_t>(pm.n_)));
  return pm;
}

std::size_t PathMatrix::source_slot(int source) const {
  for (std::size_t slot = 0; slot < sources_.size(); ++slot)
    if (sources_[slot] == source) return slot;
  throw InputError("source " + std::to_string(source) + " not in this matrix");
}

const std::vector<SearchPath>& PathMatrix::labels(int source, int endpoint) const {
  if (endpoint < 1 || endpoint > n_)
    throw VertexOutOfRange("endpoint " + std::to_string(endpoint) + " out of range");
  return cells_[source_slot(source)][static_cast<std::size_t>(endpoint - 1)];
}

std::size_t PathMatrix::label_count() const {
  std::size_t total = 0;
  for (const auto& row : cells_)
    for (const auto& cell : row) total += cell.size();
  return total;
}

bool PathMatrix::frontier_empty() const {
  if (iteration_ == 0) return sources_.empty();
  for (const auto& row : cells_)
    for (const auto& cell : row)
      for (const auto& q : cell)
        if (q.arc_count() == iteration_) return false;
  return true;
}

PathMatrix extend_iteration(PathMatrix pm, const DerivedMatrix& dm,
                            ColumnCounter& counter) {
  if (pm.n_ != dm.size())
    throw SizeMismatch("path matrix size " + std::to_string(pm.n_) +
                       " vs derived matrix size " + std::to_string(dm.size()));
  const int n = pm.n_;
  const int it = pm.iteration_;
  for (std::size_t slot = 0; slot < pm.sources_.size(); ++slot) {
    const int source = pm.sources_[slot];
    std::vector<SearchPath> frontier;
    if (it == 0) {
      frontier.push_back(SearchPath::seed(source, n));
    } else {
      for (const auto& cell : pm.cells_[slot])
        for (const auto& q : cell)
          if (q.arc_count() == it) frontier.push_back(q);
    }
    long long attempted = 0;
    for (const auto& q : frontier) {
      const int c = q.endpoint();
      for (int a = 1; a <= n; ++a) {
        counter.bump();
        if (dm.forbidden(c, a)) continue;
        if (pm.cfg_.negative_arcs_only && dm.delta(c, a) >= 0) continue;
        ++attempted;
        const bool revisit = q.visits(a);
        if (revisit && a != source) {
          if (!pm.cfg_.non_simple) continue;
          if (!passes_edge_conditions(q, dm, a)) continue;
          std::vector<int> walked = q.vertices();
          walked.push_back(a);
          CycleForm cycle = extract_cycle(walked);
          cycle.n = n;
          const std::int64_t weight = cycle_weight(dm, cycle);
          if (weight >= 0) continue;
          pm.events_.push_back({std::move(walked), cycle, weight});
          if (cycle_admissible(dm, cycle))
            pm.found_.push_back({cycle, weight, counter.columns,
                                 Provenance::ExtractedFromNonsimple});
          continue;
        }
        if (!passes_edge_conditions(q, dm, a)) continue;
        if (a == source) {
          const std::int64_t weight = q.value() + dm.delta(c, a);
          if (weight >= 0) continue;
          CycleForm cycle =
              canonical_cycle_form(CycleForm{n, {q.vertices()}});
          if (cycle_weight(dm, cycle) != weight || !cycle_admissible(dm, cycle))
            throw InternalError("closed cycle failed revalidation");
          pm.found_.push_back({std::move(cycle), weight, counter.columns,
                               Provenance::ClosedAtSource});
          continue;
        }
        SearchPath child = q.extended(dm, a);
        if (pm.cfg_.prune_nonnegative && child.value() >= 0) continue;
        if (child.new_edges().distinct_count() !=
            static_cast<std::size_t>(child.arc_count()))
          throw InternalError("retained path would duplicate a new edge");
        insert_k_best(pm.cells_[slot][static_cast<std::size_t>(a - 1)],
                      std::move(child), pm.cfg_.labels_per_cell);
      }
    }
    long long retained = 0;
    for (const auto& cell : pm.cells_[slot])
      retained += static_cast<long long>(cell.size());
    pm.trace_.push_back({source, it + 1, attempted, retained, counter.columns});
  }
  pm.iteration_ = it + 1;
  return pm;
}

SearchResult search_negative_cycles(const DerivedMatrix& dm,
                                    const EngineConfig& cfg) {
  const int n = dm.size();
  const std::size_t cap = std::max<std::size_t>(1, cfg.candidate_cap);
  SearchResult result;
  ColumnCounter counter;
  std::set<std::vector<int>> seen;
  bool done = false;
  for (int source = 1; source <= n && !done; ++source) {
    PathMatrix pm = PathMatrix::initial(dm, cfg, {source});
    std::size_t merged = 0;
    while (pm.iteration() < n) {
      pm = extend_iteration(std::move(pm), dm, counter);
      while (merged < pm.found().size()) {
        const NegativeCycle& find = pm.found()[merged++];
        if (seen.insert(find.cycle.cycles.front()).second)
          result.cycles.push_back(find);
      }
      if (cfg.policy == CyclePolicy::First && result.cycles.size() >= cap) {
        done = true;
        break;
      }
      if (pm.frontier_empty()) break;
    }
    result.trace.insert(result.trace.end(), pm.trace().begin(), pm.trace().end());
    result.events.insert(result.events.end(), pm.events().begin(),
                         pm.events().end());
  }
  if (cfg.policy == CyclePolicy::Best) {
    std::stable_sort(result.cycles.begin(), result.cycles.end(),
                     [](const NegativeCycle& a, const NegativeCycle& b) {
                       if (a.weight != b.weight) return a.weight < b.weight;
                       return a.cycle.cycles.front() < b.cycle.cycles.front();
                     });
  }
  if (result.cycles.size() > cap) result.cycles.resize(cap);
  result.columns_total = counter.columns;
  return result;
}

std::optional<NegativeCycle> find_negative_cycle(const DerivedMatrix& dm,
                                                 const EngineConfig& cfg) {
  SearchResult result = search_negative_cycles(dm, cfg);
  if (result.cycles.empty()) return std::nullopt;
  return result.cycles.front();
}

CycleForm extract_cycle(const std::vector<int>& path) {
  std::map<int, int> occurrences;
  for (int v : path) ++occurrences[v];
  int repeated = 0;
  int repeat_vertices = 0;
  for (const auto& [vertex, count] : occurrences) {
    if (count < 2) continue;
    if (count > 2)
      throw MultipleRepeats("vertex " + std::to_string(vertex) +
                            " appears more than twice");
    ++repeat_vertices;
    repeated = vertex;
  }
  if (repeat_vertices == 0) throw NotNonSimple("path has no repeated vertex");
  if (repeat_vertices > 1) throw MultipleRepeats("more than one vertex repeats");
  if (path.back() != repeated)
    throw MultipleRepeats("repeated vertex is not the path endpoint");
  const auto first = std::find(path.begin(), path.end(), repeated);
  std::vector<int> cycle(first, path.end() - 1);
  const int n = *std::max_element(path.begin(), path.end());
  return canonical_cycle_form(CycleForm{n, {std::move(cycle)}});
}

long long forced_walk_columns(const DerivedMatrix& dm, const std::vector<int>& walk) {
  if (walk.size() < 2) throw InputError("walk needs at least one arc");
  long long columns = 0;
  for (std::size_t t = 1; t < walk.size(); ++t) {
    const int target = walk[t];
    dm.delta(walk[t - 1], target);  // throws ForbiddenArc on a bad arc
    columns += target;              // candidates 1..target each cost a column
  }
  return columns;
}

}  // namespace derange
