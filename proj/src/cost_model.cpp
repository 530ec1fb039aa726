#include "derange/cost_model.hpp"

#include <sstream>

#include "derange/errors.hpp"

namespace derange {

CostMatrix::CostMatrix(int n) : n_(n) {
  if (n < 1) throw RangeError("matrix size must be >= 1");
  if (n > kMaxMatrixSize)
    throw RangeError("matrix size " + std::to_string(n) + " exceeds limit " +
                     std::to_string(kMaxMatrixSize));
  cost_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

void CostMatrix::check_indices(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    throw VertexOutOfRange("matrix index (" + std::to_string(i) + ", " +
                           std::to_string(j) + ") out of range");
}

std::int64_t CostMatrix::cost(int i, int j) const {
  check_indices(i, j);
  if (i == j)
    throw InternalError("read of forbidden diagonal entry (" +
                        std::to_string(i) + ", " + std::to_string(i) + ")");
  return cost_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

void CostMatrix::set_cost(int i, int j, std::int64_t value) {
  check_indices(i, j);
  if (i == j) throw InputError("cannot set a diagonal entry");
  if (value < -kMaxAbsCost || value > kMaxAbsCost)
    throw RangeError("cost " + std::to_string(value) + " exceeds magnitude cap");
  cost_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] = value;
}

void CostMatrix::set_edge(int i, int j, std::int64_t value) {
  set_cost(i, j, value);
  set_cost(j, i, value);
}

CostMatrix load_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  if (!(in >> n)) throw ParseError("missing matrix size");
  if (n < 1 || n > kMaxMatrixSize)
    throw ParseError("matrix size " + std::to_string(n) + " out of range 1.." +
                     std::to_string(kMaxMatrixSize));
  CostMatrix m(static_cast<int>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      long long value = 0;
      if (!(in >> value))
        throw ParseError("matrix row " + std::to_string(i) +
                         " ends early (expected " + std::to_string(n) +
                         " entries)");
      if (i == j) continue;  // diagonal tokens accepted but ignored
      if (value < -kMaxAbsCost || value > kMaxAbsCost)
        throw ParseError("cost at (" + std::to_string(i) + ", " +
                         std::to_string(j) + ") exceeds magnitude cap");
      m.set_cost(i, j, value);
    }
  }
  std::string trailing;
  if (in >> trailing) throw ParseError("trailing content after matrix: " + trailing);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (m.cost(i, j) != m.cost(j, i))
        throw AsymmetryError("cost(" + std::to_string(i) + ", " +
                             std::to_string(j) + ") = " +
                             std::to_string(m.cost(i, j)) + " but cost(" +
                             std::to_string(j) + ", " + std::to_string(i) +
                             ") = " + std::to_string(m.cost(j, i)));
  return m;
}

std::string emit_matrix(const CostMatrix& m) {
  std::string out = std::to_string(m.size()) + "\n";
  for (int i = 1; i <= m.size(); ++i) {
    for (int j = 1; j <= m.size(); ++j) {
      if (j > 1) out += ' ';
      out += (i == j) ? "0" : std::to_string(m.cost(i, j));
    }
    out += '\n';
  }
  return out;
}

void EdgeSet::add(int a, int b) {
  if (a == b) throw InputError("edge endpoints must differ");
  ++edges_[std::minmax(a, b)];
  ++total_;
}

bool EdgeSet::contains(int a, int b) const {
  return edges_.find(std::minmax(a, b)) != edges_.end();
}

int EdgeSet::multiplicity(int a, int b) const {
  auto it = edges_.find(std::minmax(a, b));
  return it == edges_.end() ? 0 : it->second;
}

std::int64_t permutation_cost(const CostMatrix& m, const Permutation& p) {
  if (m.size() != p.size())
    throw SizeMismatch("matrix size " + std::to_string(m.size()) +
                       " vs permutation size " + std::to_string(p.size()));
  if (!is_derangement(p, Mode::Assignment))
    throw FixedPointCost("permutation has a fixed point");
  std::int64_t total = 0;
  for (int x = 1; x <= p.size(); ++x) total += m.cost(x, p(x));
  return total;
}

EdgeSet edge_set(const Permutation& p) {
  if (!is_derangement(p, Mode::Assignment))
    throw FixedPointCost("permutation has a fixed point");
  EdgeSet edges;
  for (int x = 1; x <= p.size(); ++x) edges.add(x, p(x));
  return edges;
}

DerivedMatrix::DerivedMatrix(const CostMatrix& m, Permutation d)
    : n_(m.size()), base_(std::move(d)), base_inverse_(inverse(base_)) {
  if (base_.size() != n_)
    throw SizeMismatch("matrix size " + std::to_string(n_) +
                       " vs permutation size " + std::to_string(base_.size()));
  if (!is_derangement(base_, Mode::Assignment))
    throw FixedPointCost("base permutation has a fixed point");
  const std::size_t cells = static_cast<std::size_t>(n_) * n_;
  delta_.assign(cells, 0);
  forbidden_.assign(cells, 0);
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (j == i || base_(j) == i) {
        forbidden_[index(i, j)] = 1;
        continue;
      }
      delta_[index(i, j)] = m.cost(i, base_(j)) - m.cost(i, base_(i));
    }
  }
}

std::size_t DerivedMatrix::index(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    throw VertexOutOfRange("derived index (" + std::to_string(i) + ", " +
                           std::to_string(j) + ") out of range");
  return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

bool DerivedMatrix::forbidden(int i, int j) const {
  return forbidden_[index(i, j)] != 0;
}

std::int64_t DerivedMatrix::delta(int i, int j) const {
  const std::size_t idx = index(i, j);
  if (forbidden_[idx])
    throw ForbiddenArc("arc (" + std::to_string(i) + ", " + std::to_string(j) +
                       ") is forbidden");
  return delta_[idx];
}

std::optional<std::int64_t> DerivedMatrix::entry(int i, int j) const {
  const std::size_t idx = index(i, j);
  if (forbidden_[idx]) return std::nullopt;
  return delta_[idx];
}

DerivedMatrix derived_matrix(const CostMatrix& m, const Permutation& d) {
  return DerivedMatrix(m, d);
}

std::int64_t cycle_weight(const DerivedMatrix& dm, const CycleForm& c) {
  validate_cycle_form(c);
  if (c.cycles.size() != 1)
    throw InvalidCycle("cycle_weight expects exactly one cycle");
  if (c.n != dm.size())
    throw SizeMismatch("cycle over " + std::to_string(c.n) +
                       " points vs derived matrix of size " +
                       std::to_string(dm.size()));
  const auto& cycle = c.cycles.front();
  std::int64_t total = 0;
  for (std::size_t t = 0; t < cycle.size(); ++t)
    total += dm.delta(cycle[t], cycle[(t + 1) % cycle.size()]);
  return total;
}

std::string render_derived(const DerivedMatrix& dm) {
  std::string out;
  for (int i = 1; i <= dm.size(); ++i) {
    for (int j = 1; j <= dm.size(); ++j) {
      if (j > 1) out += ' ';
      const auto value = dm.entry(i, j);
      out += value ? std::to_string(*value) : "x";
    }
    out += '\n';
  }
  return out;
}

}  // namespace derange
