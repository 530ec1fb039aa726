#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace derange {

// Uniform draw from [0, span) that only relies on the bit-exact mt19937_64
// output sequence, so identical seeds give identical values on every
// platform and standard library.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t span);

// Uniform draw from the closed interval [lo, hi].
std::int64_t draw_in_range(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

// 1 -> "I", 14 -> "XIV", ... Values above 3999 extend with extra "M"s.
std::string roman_numeral(int value);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace derange
