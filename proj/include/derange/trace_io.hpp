#pragma once

#include <string>
#include <string_view>

#include "derange/cost_model.hpp"
#include "derange/improve.hpp"

namespace derange {

// Line-delimited records: one header, one record per step, one final
// summary. Serialization is deterministic: identical traces produce
// byte-identical text.
std::string trace_to_jsonl(const ImprovementTrace& trace);

// Readable rendering: Roman-numeral step headers, each permutation in
// two-row form, each applied cycle in cycle notation.
std::string trace_to_human(const ImprovementTrace& trace);

ImprovementTrace trace_from_jsonl(std::string_view text);

// Re-checks a machine trace against the matrix: per-step costs, cycle
// weights recomputed from the derived matrix, composition of each step into
// the next, strict cost decrease, and the final summary. Structural problems
// throw InputError; arithmetic mismatches throw InternalError.
void verify_trace(const CostMatrix& m, std::string_view jsonl);

}  // namespace derange
