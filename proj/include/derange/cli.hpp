#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "derange/improve.hpp"

namespace derange {

struct RunConfig {
  Mode mode = Mode::Assignment;
  CyclePolicy policy = CyclePolicy::Best;
  int labels = 4;
  int max_iter = 1000;
  int retry_limit = 16;
  bool prune_nonnegative = true;
  bool oracle_check = false;
  int oracle_limit = 9;
  std::uint64_t seed = 0;
  std::string matrix_path;
  std::string derangement_text;
  std::string trace_path;

  ImproveConfig improve_config() const;
};

// Exit codes: 0 success, 1 input or usage error, 2 broken invariant.
int run(const std::vector<std::string>& args);
int run(int argc, char** argv);

}  // namespace derange
