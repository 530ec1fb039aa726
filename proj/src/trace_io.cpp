#include "derange/trace_io.hpp"

#include <sstream>

#include <json.hpp>

#include "derange/errors.hpp"
#include "derange/util.hpp"

namespace derange {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json header_record(const ImprovementTrace& trace) {
  const ImproveConfig& cfg = trace.config;
  ordered_json record;
  record["record"] = "header";
  record["n"] = trace.n;
  record["mode"] = to_string(cfg.mode);
  record["policy"] = to_string(cfg.engine.policy);
  record["labels"] = cfg.engine.labels_per_cell;
  record["prune"] = cfg.engine.prune_nonnegative;
  record["max_iter"] = cfg.max_iter;
  record["retry_limit"] = cfg.retry_limit;
  record["oracle_check"] = cfg.oracle_check;
  record["oracle_limit"] = cfg.oracle_limit;
  record["restarts"] = "all-sources";
  return record;
}

ordered_json step_record(const TraceStep& step) {
  ordered_json record;
  record["record"] = "step";
  record["step"] = step.index;
  record["d"] = step.mapping;
  record["cost"] = step.cost;
  if (step.cycle)
    record["cycle"] = step.cycle->cycles.front();
  else
    record["cycle"] = nullptr;
  if (step.weight)
    record["weight"] = *step.weight;
  else
    record["weight"] = nullptr;
  record["columns"] = step.columns_used;
  return record;
}

ordered_json final_record(const ImprovementTrace& trace) {
  ordered_json record;
  record["record"] = "final";
  record["d"] = trace.final.image();
  record["cost"] = trace.final_cost;
  record["status"] = to_string(trace.status);
  long long applied = 0;
  for (const auto& step : trace.steps)
    if (step.cycle) ++applied;
  record["steps"] = applied;
  record["total_columns"] = trace.total_columns;
  if (trace.oracle_optimum)
    record["oracle_optimum"] = *trace.oracle_optimum;
  else
    record["oracle_optimum"] = nullptr;
  return record;
}

ordered_json parse_line(const std::string& line, std::size_t number) {
  ordered_json record = ordered_json::parse(line, nullptr, false);
  if (record.is_discarded() || !record.is_object())
    throw ParseError("trace line " + std::to_string(number) + " is not a record");
  return record;
}

std::vector<int> int_vector(const ordered_json& value, const char* what) {
  if (!value.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& item : value) {
    if (!item.is_number_integer())
      throw ParseError(std::string(what) + " must hold integers");
    out.push_back(item.get<int>());
  }
  return out;
}

}  // namespace

std::string trace_to_jsonl(const ImprovementTrace& trace) {
  std::string out = header_record(trace).dump() + "\n";
  for (const auto& step : trace.steps) out += step_record(step).dump() + "\n";
  out += final_record(trace).dump() + "\n";
  return out;
}

std::string trace_to_human(const ImprovementTrace& trace) {
  const ImproveConfig& cfg = trace.config;
  std::ostringstream out;
  out << "n=" << trace.n << " mode=" << to_string(cfg.mode)
      << " policy=" << to_string(cfg.engine.policy)
      << " labels=" << cfg.engine.labels_per_cell
      << " prune=" << (cfg.engine.prune_nonnegative ? "on" : "off")
      << " restarts=all-sources\n";
  for (const auto& step : trace.steps) {
    out << roman_numeral(step.index + 1) << ".\n";
    const RowForm rows = row_form(Permutation(step.mapping));
    std::istringstream rendered(render_row_form(rows));
    std::string line;
    out << "  D_" << step.index << "  cost " << step.cost << "\n";
    while (std::getline(rendered, line)) out << "    " << line << "\n";
    if (step.cycle)
      out << "  C_" << (step.index + 1) << " = " << to_cycle_text(*step.cycle)
          << "  weight " << *step.weight << "  columns " << step.columns_used
          << "\n";
    else
      out << "  no admissible negative cycle  columns " << step.columns_used
          << "\n";
  }
  out << "final: " << to_mapping_text(trace.final) << "  cost "
      << trace.final_cost << "\n";
  out << "status: " << to_string(trace.status);
  if (trace.oracle_optimum) out << "  oracle-optimum " << *trace.oracle_optimum;
  out << "\n";
  return out.str();
}

ImprovementTrace trace_from_jsonl(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  bool have_header = false;
  bool have_final = false;
  ImproveConfig cfg;
  int n = 0;
  std::vector<TraceStep> steps;
  ordered_json final_json;

  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    ordered_json record = parse_line(line, number);
    const std::string kind = record.value("record", "");
    if (kind == "header") {
      if (have_header) throw ParseError("duplicate header record");
      have_header = true;
      n = record.at("n").get<int>();
      cfg.mode = parse_mode(record.at("mode").get<std::string>());
      cfg.engine.policy = parse_policy(record.at("policy").get<std::string>());
      cfg.engine.labels_per_cell = record.at("labels").get<int>();
      cfg.engine.prune_nonnegative = record.at("prune").get<bool>();
      cfg.max_iter = record.at("max_iter").get<int>();
      cfg.retry_limit = record.at("retry_limit").get<int>();
      cfg.oracle_check = record.at("oracle_check").get<bool>();
      cfg.oracle_limit = record.at("oracle_limit").get<int>();
    } else if (kind == "step") {
      if (!have_header) throw ParseError("step record before header");
      if (have_final) throw ParseError("step record after final record");
      TraceStep step;
      step.index = record.at("step").get<int>();
      step.mapping = int_vector(record.at("d"), "step mapping");
      step.cost = record.at("cost").get<std::int64_t>();
      if (!record.at("cycle").is_null())
        step.cycle = CycleForm{n, {int_vector(record.at("cycle"), "step cycle")}};
      if (!record.at("weight").is_null())
        step.weight = record.at("weight").get<std::int64_t>();
      step.columns_used = record.at("columns").get<long long>();
      steps.push_back(std::move(step));
    } else if (kind == "final") {
      if (!have_header) throw ParseError("final record before header");
      if (have_final) throw ParseError("duplicate final record");
      have_final = true;
      final_json = std::move(record);
    } else {
      throw ParseError("unknown record kind on line " + std::to_string(number));
    }
  }
  if (!have_header) throw ParseError("trace has no header record");
  if (!have_final) throw ParseError("trace has no final record");
  if (steps.empty()) throw ParseError("trace has no step records");

  ImprovementTrace trace{n,
                         cfg,
                         std::move(steps),
                         Permutation(int_vector(final_json.at("d"), "final mapping")),
                         final_json.at("cost").get<std::int64_t>(),
                         parse_status(final_json.at("status").get<std::string>()),
                         final_json.at("total_columns").get<long long>(),
                         std::nullopt};
  if (!final_json.at("oracle_optimum").is_null())
    trace.oracle_optimum = final_json.at("oracle_optimum").get<std::int64_t>();
  return trace;
}

void verify_trace(const CostMatrix& m, std::string_view jsonl) {
  const ImprovementTrace trace = trace_from_jsonl(jsonl);
  if (trace.n != m.size())
    throw InputError("trace is for size " + std::to_string(trace.n) +
                     " but the matrix has size " + std::to_string(m.size()));

  Permutation current = Permutation(trace.steps.front().mapping);
  if (!is_derangement(current, trace.config.mode))
    throw InternalError("trace starts from an invalid derangement");

  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& step = trace.steps[i];
    if (step.index != static_cast<int>(i))
      throw InternalError("step indices are not contiguous");
    if (Permutation(step.mapping) != current)
      throw InternalError("step " + std::to_string(i) +
                          " does not continue the previous composition");
    const std::int64_t cost = permutation_cost(m, current);
    if (cost != step.cost)
      throw InternalError("step " + std::to_string(i) + " records cost " +
                          std::to_string(step.cost) + " but recomputation gives " +
                          std::to_string(cost));
    if (!step.cycle) {
      if (i + 1 != trace.steps.size())
        throw InternalError("only the terminal step may lack a cycle");
      break;
    }
    if (!step.weight)
      throw InternalError("step " + std::to_string(i) + " has a cycle but no weight");
    if (*step.weight >= 0)
      throw InternalError("step " + std::to_string(i) + " has non-negative weight");
    const DerivedMatrix dm = derived_matrix(m, current);
    if (cycle_weight(dm, *step.cycle) != *step.weight)
      throw InternalError("step " + std::to_string(i) +
                          " weight does not match the derived matrix");
    current = apply_cycle(current, *step.cycle, trace.config.mode);
    const std::int64_t next_cost = permutation_cost(m, current);
    if (next_cost != step.cost + *step.weight)
      throw InternalError("step " + std::to_string(i) +
                          " cost accounting is inexact");
    if (next_cost >= step.cost)
      throw InternalError("step " + std::to_string(i) + " does not decrease cost");
  }

  if (trace.final != current)
    throw InternalError("final permutation does not match the composed steps");
  if (trace.final_cost != permutation_cost(m, current))
    throw InternalError("final cost does not match recomputation");
}

}  // namespace derange
