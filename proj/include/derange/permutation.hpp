#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace derange {

// Validity notion for a fixed-point-free permutation. Assignment mode only
// forbids fixed points; two-factor mode additionally forbids 2-cycles, so
// that distinct arcs always map to distinct undirected edges.
enum class Mode { Assignment, TwoFactor };

std::string to_string(Mode mode);
Mode parse_mode(std::string_view text);

// A bijection on {1..n}. All interfaces are 1-indexed.
class Permutation {
 public:
  // Validates that `images` is a bijection on {1..n}; throws NotABijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }

  // Image of x, 1 <= x <= n.
  int operator()(int x) const;

  const std::vector<int>& image() const { return image_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;  // image_[x-1] is the image of x
};

// Disjoint cycles over {1..n}. Fixed points are omitted; each listed cycle
// has length >= 2 and no vertex appears twice across cycles.
struct CycleForm {
  int n = 0;
  std::vector<std::vector<int>> cycles;

  friend bool operator==(const CycleForm&, const CycleForm&) = default;
};

// Two-row presentation: top row 1..n, bottom row the images.
struct RowForm {
  std::vector<int> top;
  std::vector<int> bottom;
};

Permutation from_mapping(std::vector<int> images);

// Throws InvalidCycle (length < 2), VertexOutOfRange, or OverlappingCycles.
void validate_cycle_form(const CycleForm& cf);

// Each cycle (a1 a2 ... ak) maps a1->a2, ..., ak->a1; other points fixed.
Permutation from_cycles(const CycleForm& cf);

Permutation inverse(const Permutation& p);

// Right-to-left application: compose(p, q)(x) = p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);

// Cycles of length >= 2 covering all non-fixed points, each rotated to start
// at its smallest vertex, sorted by smallest vertex.
CycleForm cycle_decomposition(const Permutation& p);

// Normalizes an arbitrary valid cycle form to the same canonical shape.
CycleForm canonical_cycle_form(const CycleForm& cf);

bool is_derangement(const Permutation& p, Mode mode);

RowForm row_form(const Permutation& p);

// Column-aligned two-line rendering of a row form.
std::string render_row_form(const RowForm& rf);

// "2 1 4 3" (single spaces).
std::string to_mapping_text(const Permutation& p);

// "(1 2)(3 4)"; the identity renders as "()".
std::string to_cycle_text(const CycleForm& cf);

Permutation parse_mapping(std::string_view text);

CycleForm parse_cycle_text(std::string_view text, int n);

// Auto-detects notation: a leading "(" means cycle text, otherwise a
// one-line mapping (which must have exactly n entries).
Permutation parse_permutation_text(std::string_view text, int n);

}  // namespace derange
