#include "derange/cli.hpp"

#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "derange/errors.hpp"
#include "derange/gen.hpp"
#include "derange/oracle.hpp"
#include "derange/trace_io.hpp"
#include "derange/util.hpp"

namespace derange {

namespace {

CostMatrix load_matrix_file(const std::string& path) {
  return load_matrix(read_file(path));
}

Permutation start_permutation(const CostMatrix& m, const std::string& text) {
  if (text.empty()) return canonical_start(m.size());
  return parse_permutation_text(text, m.size());
}

std::string witness_text(const OracleResult& result) {
  if (std::holds_alternative<Permutation>(result.witness)) {
    const auto& p = std::get<Permutation>(result.witness);
    return to_mapping_text(p) + " = " + to_cycle_text(cycle_decomposition(p));
  }
  return to_cycle_text(std::get<CycleForm>(result.witness));
}

void print_cycle_result(const std::optional<NegativeCycle>& cycle) {
  if (!cycle) {
    std::cout << "no negative cycle found\n";
    return;
  }
  std::cout << "negative cycle " << to_cycle_text(cycle->cycle) << "  weight "
            << cycle->weight << "  columns " << cycle->columns_used << "  ("
            << to_string(cycle->provenance) << ")\n";
}

int command_improve(const RunConfig& cfg, bool machine) {
  const CostMatrix m = load_matrix_file(cfg.matrix_path);
  const Permutation d0 = start_permutation(m, cfg.derangement_text);
  const ImprovementTrace trace = improve(m, d0, cfg.improve_config());
  const std::string jsonl = trace_to_jsonl(trace);
  if (!cfg.trace_path.empty()) write_file(cfg.trace_path, jsonl);
  std::cout << (machine ? jsonl : trace_to_human(trace));
  return 0;
}

int command_oracle_min(const std::string& matrix_path, Mode mode, int limit) {
  const CostMatrix m = load_matrix_file(matrix_path);
  const OracleResult result = min_derangement(m, mode, limit);
  std::cout << "min " << to_string(mode) << " derangement: "
            << result.optimum_value << "  witness " << witness_text(result)
            << "  examined " << result.instances_examined << "\n";
  if (m.size() >= 3 && m.size() <= limit) {
    const OracleResult tour = min_tour(m, limit);
    std::cout << "min tour: " << tour.optimum_value << "  witness "
              << witness_text(tour) << "  examined "
              << tour.instances_examined << "\n";
  }
  return 0;
}

int command_negcycle(const RunConfig& cfg, bool non_simple, bool negative_arcs,
                     std::size_t candidates, bool exhaustive, bool machine) {
  const CostMatrix m = load_matrix_file(cfg.matrix_path);
  const Permutation d = parse_permutation_text(cfg.derangement_text, m.size());
  const DerivedMatrix dm = derived_matrix(m, d);
  if (exhaustive) {
    print_cycle_result(exhaustive_negative_cycle(dm, cfg.mode, cfg.oracle_limit));
    return 0;
  }
  EngineConfig engine{cfg.policy, cfg.labels, cfg.prune_nonnegative,
                      negative_arcs, non_simple, candidates};
  const SearchResult result = search_negative_cycles(dm, engine);
  if (machine) {
    for (const auto& rec : result.trace) {
      nlohmann::ordered_json line;
      line["record"] = "iteration";
      line["source"] = rec.source;
      line["iteration"] = rec.iteration;
      line["roman"] = roman_numeral(rec.iteration);
      line["extensions"] = rec.extensions_attempted;
      line["labels"] = rec.labels_retained;
      line["columns"] = rec.columns_cumulative;
      std::cout << line.dump() << "\n";
    }
    for (const auto& cycle : result.cycles) {
      nlohmann::ordered_json line;
      line["record"] = "cycle";
      line["cycle"] = cycle.cycle.cycles.front();
      line["weight"] = cycle.weight;
      line["columns"] = cycle.columns_used;
      line["provenance"] = to_string(cycle.provenance);
      std::cout << line.dump() << "\n";
    }
    nlohmann::ordered_json line;
    line["record"] = "result";
    line["found"] = !result.cycles.empty();
    line["total_columns"] = result.columns_total;
    std::cout << line.dump() << "\n";
    return 0;
  }
  for (const auto& rec : result.trace)
    std::cout << "[source " << rec.source << "] " << roman_numeral(rec.iteration)
              << ". extensions " << rec.extensions_attempted << "  labels "
              << rec.labels_retained << "  columns " << rec.columns_cumulative
              << "\n";
  if (result.cycles.empty())
    std::cout << "no negative cycle found  columns " << result.columns_total
              << "\n";
  else
    for (const auto& cycle : result.cycles)
      print_cycle_result(cycle);
  return 0;
}

int command_derived(const std::string& matrix_path, const std::string& text) {
  const CostMatrix m = load_matrix_file(matrix_path);
  const Permutation d = parse_permutation_text(text, m.size());
  std::cout << render_derived(derived_matrix(m, d));
  return 0;
}

int command_verify(const std::string& matrix_path, const std::string& trace_path) {
  const CostMatrix m = load_matrix_file(matrix_path);
  const std::string jsonl = read_file(trace_path);
  verify_trace(m, jsonl);
  const ImprovementTrace trace = trace_from_jsonl(jsonl);
  long long applied = 0;
  for (const auto& step : trace.steps)
    if (step.cycle) ++applied;
  std::cout << "trace verified: " << applied << " steps, final cost "
            << trace.final_cost << "\n";
  return 0;
}

int command_gen(int size, std::uint64_t seed, std::int64_t lo, std::int64_t hi,
                const std::string& output) {
  const std::string text = emit_matrix(gen_instance(size, seed, lo, hi));
  if (output.empty())
    std::cout << text;
  else
    write_file(output, text);
  return 0;
}

}  // namespace

ImproveConfig RunConfig::improve_config() const {
  ImproveConfig cfg;
  cfg.mode = mode;
  cfg.engine.policy = policy;
  cfg.engine.labels_per_cell = labels;
  cfg.engine.prune_nonnegative = prune_nonnegative;
  cfg.max_iter = max_iter;
  cfg.retry_limit = retry_limit;
  cfg.oracle_check = oracle_check;
  cfg.oracle_limit = oracle_limit;
  return cfg;
}

int run(const std::vector<std::string>& args) {
  CLI::App app{"negative-cycle cancellation over derangements of a symmetric cost matrix"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string mode_text = "assignment";
  std::string policy_text = "best";
  bool machine = false;
  bool non_simple = false;
  bool negative_arcs = false;
  bool exhaustive = false;
  std::size_t candidates = 1;
  int gen_size = 0;
  std::int64_t gen_min = -50;
  std::int64_t gen_max = 50;
  std::string gen_output;

  const auto mode_check = CLI::IsMember({"assignment", "two-factor"});
  const auto policy_check = CLI::IsMember({"first", "best"});

  CLI::App* improve_cmd = app.add_subcommand("improve", "run the improvement loop");
  improve_cmd->add_option("--matrix", cfg.matrix_path, "instance file")->required();
  improve_cmd->add_option("--derangement", cfg.derangement_text,
                          "start derangement (mapping or cycle text; default (1 2 ... n))");
  improve_cmd->add_option("--mode", mode_text, "assignment or two-factor")->check(mode_check);
  improve_cmd->add_option("--policy", policy_text, "first or best")->check(policy_check);
  improve_cmd->add_option("--labels", cfg.labels, "labels per cell")->check(CLI::PositiveNumber);
  improve_cmd->add_option("--max-iter", cfg.max_iter, "step cap")->check(CLI::PositiveNumber);
  improve_cmd->add_option("--retry-limit", cfg.retry_limit, "candidates tried per step")
      ->check(CLI::PositiveNumber);
  improve_cmd->add_flag("--no-prune", "retain non-negative partial paths");
  improve_cmd->add_flag("--oracle-check", cfg.oracle_check,
                        "certify or refute the result exhaustively");
  improve_cmd->add_option("--oracle-limit", cfg.oracle_limit, "oracle size limit")
      ->check(CLI::PositiveNumber);
  improve_cmd->add_option("--trace-out", cfg.trace_path, "write the machine trace here");
  improve_cmd->add_flag("--machine", machine, "print the machine trace instead of the summary");

  CLI::App* oracle_cmd = app.add_subcommand("oracle-min", "exhaustive minima");
  oracle_cmd->add_option("--matrix", cfg.matrix_path, "instance file")->required();
  oracle_cmd->add_option("--mode", mode_text, "assignment or two-factor")->check(mode_check);
  oracle_cmd->add_option("--oracle-limit", cfg.oracle_limit, "oracle size limit")
      ->check(CLI::PositiveNumber);

  CLI::App* negcycle_cmd = app.add_subcommand("negcycle", "one negative-cycle search");
  negcycle_cmd->add_option("--matrix", cfg.matrix_path, "instance file")->required();
  negcycle_cmd->add_option("--derangement", cfg.derangement_text,
                           "derangement (mapping or cycle text)")->required();
  negcycle_cmd->add_option("--mode", mode_text, "filter mode for --exhaustive")->check(mode_check);
  negcycle_cmd->add_option("--policy", policy_text, "first or best")->check(policy_check);
  negcycle_cmd->add_option("--labels", cfg.labels, "labels per cell")->check(CLI::PositiveNumber);
  negcycle_cmd->add_flag("--no-prune", "retain non-negative partial paths");
  negcycle_cmd->add_flag("--non-simple", non_simple,
                         "permit one interior revisit and extract the cycle");
  negcycle_cmd->add_flag("--negative-arcs-only", negative_arcs,
                         "traverse only strictly negative entries");
  negcycle_cmd->add_option("--candidates", candidates, "cycles to report")
      ->check(CLI::PositiveNumber);
  negcycle_cmd->add_flag("--exhaustive", exhaustive, "use the exhaustive oracle");
  negcycle_cmd->add_option("--oracle-limit", cfg.oracle_limit, "oracle size limit")
      ->check(CLI::PositiveNumber);
  negcycle_cmd->add_flag("--json", machine, "machine-readable records");

  CLI::App* derived_cmd = app.add_subcommand("derived", "dump the derived matrix");
  derived_cmd->add_option("--matrix", cfg.matrix_path, "instance file")->required();
  derived_cmd->add_option("--derangement", cfg.derangement_text,
                          "derangement (mapping or cycle text)")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "re-check a machine trace");
  verify_cmd->add_option("--matrix", cfg.matrix_path, "instance file")->required();
  verify_cmd->add_option("--trace", cfg.trace_path, "machine trace file")->required();

  CLI::App* gen_cmd = app.add_subcommand("gen", "write a random symmetric instance");
  gen_cmd->add_option("--size", gen_size, "number of points (>= 3)")->required();
  gen_cmd->add_option("--seed", cfg.seed, "generator seed");
  gen_cmd->add_option("--min-cost", gen_min, "lower cost bound");
  gen_cmd->add_option("--max-cost", gen_max, "upper cost bound");
  gen_cmd->add_option("--output", gen_output, "output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    cfg.mode = parse_mode(mode_text);
    cfg.policy = parse_policy(policy_text);
    if (improve_cmd->parsed()) {
      cfg.prune_nonnegative = improve_cmd->count("--no-prune") == 0;
      return command_improve(cfg, machine);
    }
    if (oracle_cmd->parsed())
      return command_oracle_min(cfg.matrix_path, cfg.mode, cfg.oracle_limit);
    if (negcycle_cmd->parsed()) {
      cfg.prune_nonnegative = negcycle_cmd->count("--no-prune") == 0;
      return command_negcycle(cfg, non_simple, negative_arcs, candidates,
                              exhaustive, machine);
    }
    if (derived_cmd->parsed())
      return command_derived(cfg.matrix_path, cfg.derangement_text);
    if (verify_cmd->parsed())
      return command_verify(cfg.matrix_path, cfg.trace_path);
    if (gen_cmd->parsed())
      return command_gen(gen_size, cfg.seed, gen_min, gen_max, gen_output);
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace derange
