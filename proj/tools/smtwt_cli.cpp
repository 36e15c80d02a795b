#include <filesystem>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "smtwt/experiment.hpp"
#include "smtwt/generator.hpp"
#include "smtwt/instance_io.hpp"
#include "smtwt/metaheuristics.hpp"
#include "smtwt/oracle.hpp"
#include "smtwt/reference_optima.hpp"

namespace {

using namespace smtwt;

struct SolveOptions {
  std::string instance_path;
  std::string dialect = "canonical";
  std::string algo = "ils";
  SearchConfig cfg;
  double target = -1.0;
  double time_limit = -1.0;
};

void add_config_flags(CLI::App* cmd, SolveOptions& opt) {
  cmd->add_option("--instance", opt.instance_path, "instance file")
      ->required();
  cmd->add_option("--dialect", opt.dialect, "canonical | cicirello | unweighted")
      ->check(CLI::IsMember({"canonical", "cicirello", "unweighted"}));
  cmd->add_option("--theta", opt.cfg.theta, "filter percentile in [0, 1]");
  cmd->add_option("--lmax", opt.cfg.max_block_len,
                  "largest l-block neighborhood");
  cmd->add_flag("--swap,!--no-swap", opt.cfg.use_swap,
                "include the swap neighborhood");
  cmd->add_option("--iters", opt.cfg.iterations,
                  "ILS: I_ILS (0 = 4n); VNS: total iterations");
  cmd->add_option("--restarts", opt.cfg.restarts, "restart count");
  cmd->add_option("--seed", opt.cfg.seed, "rng seed");
}

void print_filter_table(const FilterSnapshot& snap) {
  std::cout << "neighborhood  threshold       seen   admitted   rejected "
               "  skipped%  improving  lost\n";
  for (const auto& entry : snap.entries) {
    const auto& c = entry.counters;
    std::cout << std::left << std::setw(13) << entry.id.name() << std::right;
    if (entry.threshold) {
      std::cout << std::setw(9) << *entry.threshold;
    } else {
      std::cout << std::setw(9) << "M";
    }
    std::cout << std::setw(11) << c.seen << std::setw(11) << c.admitted
              << std::setw(11) << c.rejected << std::setw(11) << std::fixed
              << std::setprecision(1)
              << (c.seen ? 100.0 * c.rejected / c.seen : 0.0) << std::setw(11)
              << c.improving << std::setw(6) << c.rejected_improving << '\n';
  }
}

int run_solve(const SolveOptions& opt) {
  SearchConfig cfg = opt.cfg;
  if (opt.target >= 0.0) cfg.target = static_cast<Cost>(opt.target);
  if (opt.time_limit > 0.0) cfg.time_limit_s = opt.time_limit;
  const Instance inst =
      load_instance(opt.instance_path, dialect_from_name(opt.dialect));
  const RunReport report = run_algorithm(opt.algo, inst, cfg);

  std::cout << "instance: " << opt.instance_path << " (n=" << inst.n << ")\n";
  std::cout << "algorithm: " << opt.algo << (cfg.fast ? " (fast)" : "")
            << "  seed: " << cfg.seed << '\n';
  std::cout << "cost: " << report.best_cost << '\n';
  std::cout << "order:";
  for (int pos = 1; pos <= inst.n; ++pos) {
    std::cout << ' ' << report.best_sequence.order[pos];
  }
  std::cout << '\n';
  std::cout << std::fixed << std::setprecision(3)
            << "seconds: " << report.elapsed_seconds
            << "  time-to-best: " << report.time_to_best_seconds
            << "  descents: " << report.iterations
            << "  restarts: " << report.restarts << '\n';
  if (report.target_hit) std::cout << "target reached\n";
  if (cfg.fast) print_filter_table(report.filter);
  return 0;
}

int run_generate(const GeneratorConfig& gc, const std::string& out_path) {
  const Instance inst = generate_instance(gc);
  const std::string text = write_canonical(inst);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
    std::cout << "wrote " << out_path << " (n=" << inst.n << ")\n";
  }
  return 0;
}

int run_oracle(const std::string& path, const std::string& dialect) {
  const Instance inst = load_instance(path, dialect_from_name(dialect));
  const OracleResult result = exact_bruteforce(inst);
  std::cout << "optimum: " << result.opt_cost << '\n';
  std::cout << "order:";
  for (int pos = 1; pos <= inst.n; ++pos) {
    std::cout << ' ' << result.opt_sequence.order[pos];
  }
  std::cout << '\n';
  std::cout << "nodes: " << result.nodes_explored << '\n';
  return 0;
}

int run_diagnose(SolveOptions opt) {
  opt.cfg.fast = true;
  opt.cfg.diagnostic = true;
  const Instance inst =
      load_instance(opt.instance_path, dialect_from_name(opt.dialect));
  const RunReport report = run_algorithm(opt.algo, inst, opt.cfg);
  std::cout << "diagnostic run (every candidate evaluated, filter decisions "
               "tagged)\n";
  std::cout << "cost: " << report.best_cost << '\n';
  print_filter_table(report.filter);
  const auto& entries = report.filter.entries;
  std::uint64_t seen = 0, rejected = 0, improving = 0, lost = 0;
  for (const auto& entry : entries) {
    seen += entry.counters.seen;
    rejected += entry.counters.rejected;
    improving += entry.counters.improving;
    lost += entry.counters.rejected_improving;
  }
  std::cout << std::fixed << std::setprecision(1) << "total skipped%: "
            << (seen ? 100.0 * rejected / seen : 0.0)
            << "  lost improving%: "
            << (improving ? 100.0 * lost / improving : 0.0) << '\n';
  return 0;
}

int run_stats(const std::string& results_path,
              const std::string& reference_path) {
  const std::string results = read_text_file(results_path);
  std::map<std::string, Cost> reference;
  if (reference_path == "builtin") {
    reference = reference_optima();
  } else {
    reference = parse_reference_map(read_text_file(reference_path));
  }
  std::cout << render_gap_stats(gaps_from_results(results, reference));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "single-machine total weighted tardiness with sequence-dependent "
      "setups: ILS-RVND / GRASP / VNS with setup-variation move filtering"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "run one seeded solver run");
  add_config_flags(solve, solve_opt);
  solve->add_option("--algo", solve_opt.algo, "ils | grasp | vns")
      ->check(CLI::IsMember({"ils", "grasp", "vns"}));
  solve->add_flag("--fast,!--no-fast", solve_opt.cfg.fast,
                  "enable the setup-variation filter");
  solve->add_option("--target", solve_opt.target,
                    "stop when the cost reaches this value");
  solve->add_option("--time-limit", solve_opt.time_limit,
                    "wall-clock limit in seconds");

  GeneratorConfig gen_cfg;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate",
                                      "write a random instance (canonical "
                                      "format)");
  generate->add_option("--n", gen_cfg.n, "job count")->required();
  generate->add_option("--tau", gen_cfg.tau, "due-date tightness");
  generate->add_option("--r", gen_cfg.r, "due-date range");
  generate->add_option("--eta", gen_cfg.eta, "setup/processing ratio");
  generate->add_option("--seed", gen_cfg.seed, "rng seed");
  generate->add_option("--out", gen_out, "output file ('-' = stdout)");

  std::string manifest_path;
  auto* bench = app.add_subcommand("bench", "run a manifest of experiments");
  bench->add_option("--manifest", manifest_path, "manifest JSON file")
      ->required();

  SolveOptions diag_opt;
  auto* diagnose = app.add_subcommand(
      "diagnose-filter", "diagnostic run tagging lost improving moves");
  add_config_flags(diagnose, diag_opt);
  diagnose->add_option("--algo", diag_opt.algo, "ils | grasp | vns")
      ->check(CLI::IsMember({"ils", "grasp", "vns"}));

  std::string oracle_path;
  std::string oracle_dialect = "canonical";
  auto* oracle = app.add_subcommand("oracle",
                                    "exact brute force (n <= 12)");
  oracle->add_option("--instance", oracle_path, "instance file")->required();
  oracle->add_option("--dialect", oracle_dialect,
                     "canonical | cicirello | unweighted");

  std::string stats_results;
  std::string stats_reference;
  auto* stats = app.add_subcommand("stats", "gap statistics over results");
  stats->add_option("--results", stats_results, "results JSON")->required();
  stats->add_option("--reference", stats_reference,
                    "reference JSON file or 'builtin'")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(solve_opt);
    if (generate->parsed()) return run_generate(gen_cfg, gen_out);
    if (bench->parsed()) {
      const Manifest manifest = load_manifest(manifest_path);
      const ExperimentOutput output = run_experiment(manifest);
      if (manifest.results_path.empty()) std::cout << output.results_json;
      if (!manifest.summary_path.empty()) {
        std::cout << "summary: " << manifest.summary_path.string() << '\n';
      }
      if (!manifest.results_path.empty()) {
        std::cout << "results: " << manifest.results_path.string() << '\n';
      }
      return 0;
    }
    if (diagnose->parsed()) return run_diagnose(diag_opt);
    if (oracle->parsed()) return run_oracle(oracle_path, oracle_dialect);
    if (stats->parsed()) return run_stats(stats_results, stats_reference);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return 0;
}
