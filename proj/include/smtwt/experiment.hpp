#ifndef SMTWT_EXPERIMENT_HPP
#define SMTWT_EXPERIMENT_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smtwt/gap_stats.hpp"
#include "smtwt/instance_io.hpp"
#include "smtwt/metaheuristics.hpp"

namespace smtwt {

struct ManifestInstance {
  std::string id;
  std::filesystem::path path;
  Dialect dialect = Dialect::canonical;
  std::optional<Cost> target;
  std::optional<Cost> reference;
  Instance instance;  // loaded up front so bad files fail before any run
};

struct Manifest {
  std::string algorithm = "ils";
  std::string mode = "budget";  // budget | target | time
  std::vector<std::uint64_t> seeds;
  SearchConfig config;
  std::vector<ManifestInstance> instances;
  int threads = 1;
  std::filesystem::path results_path;  // empty: not written
  std::filesystem::path summary_path;  // empty: not written
};

// Parses and fully validates a manifest; relative paths are resolved against
// base_dir. Every instance file is loaded here — a missing file or malformed
// field throws before any run starts.
Manifest parse_manifest(const std::string& json_text,
                        const std::filesystem::path& base_dir);

Manifest load_manifest(const std::filesystem::path& path);

struct ExperimentOutput {
  std::string results_json;
  std::string summary_csv;
};

// Executes every (instance, seed) pair, re-verifies each reported cost
// against total_cost of the reported sequence, and renders the result JSON
// and CSV summary (also writing them to the manifest's output paths when
// set). Output order is fixed (instance-major, seed-minor) regardless of
// thread count.
ExperimentOutput run_experiment(const Manifest& manifest);

// Result JSON with every "timing" subtree removed; reruns of the same
// manifest compare byte-identically on this form.
std::string results_without_timing(const std::string& results_json);

// Gap statistics over a results JSON. The reference map may come from
// parse_reference_map or from the built-in table.
GapStats gaps_from_results(const std::string& results_json,
                           const std::map<std::string, Cost>& reference);

// {"id": cost, ...}
std::map<std::string, Cost> parse_reference_map(const std::string& json_text);

std::string render_gap_stats(const GapStats& stats);

}  // namespace smtwt

#endif
