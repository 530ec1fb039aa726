#include "derange/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "derange/errors.hpp"

namespace derange {

std::string to_string(Mode mode) {
  return mode == Mode::Assignment ? "assignment" : "two-factor";
}

Mode parse_mode(std::string_view text) {
  if (text == "assignment") return Mode::Assignment;
  if (text == "two-factor") return Mode::TwoFactor;
  throw InputError("unknown mode: " + std::string(text));
}

Permutation::Permutation(std::vector<int> images) : image_(std::move(images)) {
  const int n = static_cast<int>(image_.size());
  if (n < 1) throw NotABijection("permutation needs at least one point");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int value : image_) {
    if (value < 1 || value > n)
      throw NotABijection("image value " + std::to_string(value) +
                          " out of range 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(value - 1)])
      throw NotABijection("duplicate image value " + std::to_string(value));
    seen[static_cast<std::size_t>(value - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

int Permutation::operator()(int x) const {
  if (x < 1 || x > size())
    throw VertexOutOfRange("point " + std::to_string(x) + " out of range 1.." +
                           std::to_string(size()));
  return image_[static_cast<std::size_t>(x - 1)];
}

Permutation from_mapping(std::vector<int> images) {
  return Permutation(std::move(images));
}

void validate_cycle_form(const CycleForm& cf) {
  if (cf.n < 1) throw VertexOutOfRange("cycle form needs n >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(cf.n), false);
  for (const auto& cycle : cf.cycles) {
    if (cycle.size() < 2)
      throw InvalidCycle("cycles must have length >= 2");
    for (int v : cycle) {
      if (v < 1 || v > cf.n)
        throw VertexOutOfRange("cycle vertex " + std::to_string(v) +
                               " out of range 1.." + std::to_string(cf.n));
      if (seen[static_cast<std::size_t>(v - 1)])
        throw OverlappingCycles("vertex " + std::to_string(v) +
                                " appears in more than one position");
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
  }
}

Permutation from_cycles(const CycleForm& cf) {
  validate_cycle_form(cf);
  std::vector<int> images(static_cast<std::size_t>(cf.n));
  std::iota(images.begin(), images.end(), 1);
  for (const auto& cycle : cf.cycles) {
    const std::size_t k = cycle.size();
    for (std::size_t t = 0; t < k; ++t)
      images[static_cast<std::size_t>(cycle[t] - 1)] = cycle[(t + 1) % k];
  }
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(static_cast<std::size_t>(p.size()));
  for (int x = 1; x <= p.size(); ++x)
    images[static_cast<std::size_t>(p(x) - 1)] = x;
  return Permutation(std::move(images));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw SizeMismatch("compose: sizes " + std::to_string(p.size()) + " and " +
                       std::to_string(q.size()) + " differ");
  std::vector<int> images(static_cast<std::size_t>(p.size()));
  for (int x = 1; x <= p.size(); ++x)
    images[static_cast<std::size_t>(x - 1)] = p(q(x));
  return Permutation(std::move(images));
}

CycleForm cycle_decomposition(const Permutation& p) {
  CycleForm cf;
  cf.n = p.size();
  std::vector<bool> visited(static_cast<std::size_t>(p.size()), false);
  for (int start = 1; start <= p.size(); ++start) {
    if (visited[static_cast<std::size_t>(start - 1)] || p(start) == start)
      continue;
    std::vector<int> cycle;
    for (int v = start; !visited[static_cast<std::size_t>(v - 1)]; v = p(v)) {
      visited[static_cast<std::size_t>(v - 1)] = true;
      cycle.push_back(v);
    }
    cf.cycles.push_back(std::move(cycle));
  }
  return cf;
}

CycleForm canonical_cycle_form(const CycleForm& cf) {
  validate_cycle_form(cf);
  CycleForm out;
  out.n = cf.n;
  out.cycles = cf.cycles;
  for (auto& cycle : out.cycles) {
    auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
  }
  std::sort(out.cycles.begin(), out.cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

bool is_derangement(const Permutation& p, Mode mode) {
  for (int x = 1; x <= p.size(); ++x) {
    if (p(x) == x) return false;
    if (mode == Mode::TwoFactor && p(p(x)) == x) return false;
  }
  return true;
}

RowForm row_form(const Permutation& p) {
  RowForm rf;
  rf.top.resize(static_cast<std::size_t>(p.size()));
  std::iota(rf.top.begin(), rf.top.end(), 1);
  rf.bottom = p.image();
  return rf;
}

std::string render_row_form(const RowForm& rf) {
  std::string top_line;
  std::string bottom_line;
  for (std::size_t i = 0; i < rf.top.size(); ++i) {
    std::string t = std::to_string(rf.top[i]);
    std::string b = std::to_string(rf.bottom[i]);
    const std::size_t width = std::max(t.size(), b.size());
    if (i > 0) {
      top_line += ' ';
      bottom_line += ' ';
    }
    top_line += std::string(width - t.size(), ' ') + t;
    bottom_line += std::string(width - b.size(), ' ') + b;
  }
  return top_line + "\n" + bottom_line;
}

std::string to_mapping_text(const Permutation& p) {
  std::string out;
  for (int x = 1; x <= p.size(); ++x) {
    if (x > 1) out += ' ';
    out += std::to_string(p(x));
  }
  return out;
}

std::string to_cycle_text(const CycleForm& cf) {
  if (cf.cycles.empty()) return "()";
  std::string out;
  for (const auto& cycle : cf.cycles) {
    out += '(';
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      if (t > 0) out += ' ';
      out += std::to_string(cycle[t]);
    }
    out += ')';
  }
  return out;
}

namespace {

std::vector<int> parse_int_tokens(std::string_view text) {
  std::vector<int> values;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(token, &used);
      if (used != token.size()) throw ParseError("bad integer: " + token);
      values.push_back(value);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad integer: " + token);
    }
  }
  return values;
}

}  // namespace

Permutation parse_mapping(std::string_view text) {
  std::vector<int> values = parse_int_tokens(text);
  if (values.empty()) throw ParseError("empty mapping text");
  return Permutation(std::move(values));
}

CycleForm parse_cycle_text(std::string_view text, int n) {
  CycleForm cf;
  cf.n = n;
  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_spaces();
  if (pos == text.size()) throw ParseError("empty cycle text");
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle text");
    ++pos;
    std::vector<int> cycle;
    skip_spaces();
    while (pos < text.size() && text[pos] != ')') {
      std::size_t end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == pos) throw ParseError("expected vertex number in cycle text");
      cycle.push_back(std::stoi(std::string(text.substr(pos, end - pos))));
      pos = end;
      skip_spaces();
    }
    if (pos == text.size()) throw ParseError("unterminated cycle");
    ++pos;  // ')'
    if (!cycle.empty()) cf.cycles.push_back(std::move(cycle));
    skip_spaces();
  }
  validate_cycle_form(cf);
  return cf;
}

Permutation parse_permutation_text(std::string_view text, int n) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first < text.size() && text[first] == '(')
    return from_cycles(parse_cycle_text(text, n));
  Permutation p = parse_mapping(text);
  if (p.size() != n)
    throw SizeMismatch("mapping has " + std::to_string(p.size()) +
                       " entries, expected " + std::to_string(n));
  return p;
}

}  // namespace derange
