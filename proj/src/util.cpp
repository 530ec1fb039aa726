#include "derange/util.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "derange/errors.hpp"

namespace derange {

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t span) {
  if (span == 0) throw RangeError("bounded_draw: empty range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  // 2^64 mod span; rejecting the top `rem` values makes the draw unbiased.
  const std::uint64_t rem = (max % span + 1) % span;
  for (;;) {
    const std::uint64_t x = rng();
    if (rem == 0 || x <= max - rem) return x % span;
  }
}

std::int64_t draw_in_range(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw RangeError("draw_in_range: lo > hi");
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return lo + static_cast<std::int64_t>(bounded_draw(rng, span));
}

std::string roman_numeral(int value) {
  if (value <= 0) throw RangeError("roman_numeral: value must be positive");
  static constexpr struct { int value; const char* digits; } table[] = {
      {1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"}, {100, "C"},
      {90, "XC"},  {50, "L"},   {40, "XL"}, {10, "X"},   {9, "IX"},
      {5, "V"},    {4, "IV"},   {1, "I"},
  };
  std::string out;
  for (const auto& entry : table) {
    while (value >= entry.value) {
      out += entry.digits;
      value -= entry.value;
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
  if (!out) throw InputError("write failed: " + path);
}

}  // namespace derange
