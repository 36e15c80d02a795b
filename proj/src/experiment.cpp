#include "smtwt/experiment.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "smtwt/parallel.hpp"
#include "smtwt/reference_optima.hpp"

namespace smtwt {

using ordered_json = nlohmann::ordered_json;

namespace {

SearchConfig config_from_json(const ordered_json& j) {
  SearchConfig cfg;
  if (j.contains("theta")) cfg.theta = j.at("theta").get<double>();
  if (j.contains("lmax")) cfg.max_block_len = j.at("lmax").get<int>();
  if (j.contains("swap")) cfg.use_swap = j.at("swap").get<bool>();
  if (j.contains("restarts")) cfg.restarts = j.at("restarts").get<int>();
  if (j.contains("iterations")) cfg.iterations = j.at("iterations").get<int>();
  if (j.contains("fast")) cfg.fast = j.at("fast").get<bool>();
  if (j.contains("learning_divisor"))
    cfg.learning_divisor = j.at("learning_divisor").get<int>();
  if (j.contains("learning_fraction"))
    cfg.learning_fraction = j.at("learning_fraction").get<double>();
  if (j.contains("construction_k"))
    cfg.construction_k = j.at("construction_k").get<int>();
  if (j.contains("diagnostic")) cfg.diagnostic = j.at("diagnostic").get<bool>();
  if (j.contains("record_improvements"))
    cfg.record_improvements = j.at("record_improvements").get<bool>();
  if (j.contains("time_limit") && !j.at("time_limit").is_null())
    cfg.time_limit_s = j.at("time_limit").get<double>();
  return cfg;
}

ordered_json config_to_json(const SearchConfig& cfg) {
  ordered_json j;
  j["theta"] = cfg.theta;
  j["lmax"] = cfg.max_block_len;
  j["swap"] = cfg.use_swap;
  j["restarts"] = cfg.restarts;
  j["iterations"] = cfg.iterations;
  j["fast"] = cfg.fast;
  j["learning_divisor"] = cfg.learning_divisor;
  j["learning_fraction"] = cfg.learning_fraction;
  j["construction_k"] = cfg.construction_k;
  j["diagnostic"] = cfg.diagnostic;
  j["record_improvements"] = cfg.record_improvements;
  if (cfg.time_limit_s) j["time_limit"] = *cfg.time_limit_s;
  return j;
}

std::string id_from_path(const std::filesystem::path& path) {
  return path.stem().string();
}

[[noreturn]] void manifest_error(const std::string& what) {
  throw std::runtime_error("manifest: " + what);
}

}  // namespace

Manifest parse_manifest(const std::string& json_text,
                        const std::filesystem::path& base_dir) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& err) {
    manifest_error(std::string("not valid JSON: ") + err.what());
  }

  Manifest m;
  m.algorithm = j.value("algorithm", std::string("ils"));
  if (m.algorithm != "ils" && m.algorithm != "grasp" && m.algorithm != "vns") {
    manifest_error("unknown algorithm '" + m.algorithm + "'");
  }
  m.mode = j.value("mode", std::string("budget"));
  if (m.mode != "budget" && m.mode != "target" && m.mode != "time") {
    manifest_error("unknown mode '" + m.mode + "'");
  }

  if (j.contains("seeds")) {
    for (const auto& seed : j.at("seeds")) {
      m.seeds.push_back(seed.get<std::uint64_t>());
    }
  } else {
    const int runs = j.value("runs", 10);
    if (runs < 1) manifest_error("runs must be >= 1");
    for (int s = 1; s <= runs; ++s) m.seeds.push_back(s);
  }
  if (m.seeds.empty()) manifest_error("no seeds");

  if (j.contains("config")) m.config = config_from_json(j.at("config"));
  if (m.mode == "time" && !m.config.time_limit_s) {
    manifest_error("mode 'time' needs config.time_limit");
  }
  m.config.validate();

  m.threads = j.value("threads", 1);
  if (m.threads < 1) manifest_error("threads must be >= 1");

  const Dialect default_dialect =
      dialect_from_name(j.value("dialect", std::string("canonical")));

  std::map<std::string, Cost> targets;
  if (j.contains("targets")) {
    for (const auto& [key, value] : j.at("targets").items()) {
      targets[key] = value.get<Cost>();
    }
  }
  std::map<std::string, Cost> reference;
  bool builtin_reference = false;
  if (j.contains("reference")) {
    if (j.at("reference").is_string()) {
      if (j.at("reference").get<std::string>() != "builtin") {
        manifest_error("reference must be an object or \"builtin\"");
      }
      builtin_reference = true;
    } else {
      for (const auto& [key, value] : j.at("reference").items()) {
        reference[key] = value.get<Cost>();
      }
    }
  }

  if (!j.contains("instances") || j.at("instances").empty()) {
    manifest_error("no instances listed");
  }
  for (const auto& entry : j.at("instances")) {
    ManifestInstance mi;
    mi.dialect = default_dialect;
    if (entry.is_string()) {
      mi.path = entry.get<std::string>();
    } else {
      mi.path = entry.at("path").get<std::string>();
      if (entry.contains("id")) mi.id = entry.at("id").get<std::string>();
      if (entry.contains("dialect")) {
        mi.dialect = dialect_from_name(entry.at("dialect").get<std::string>());
      }
      if (entry.contains("target")) mi.target = entry.at("target").get<Cost>();
      if (entry.contains("reference")) {
        mi.reference = entry.at("reference").get<Cost>();
      }
    }
    if (mi.path.is_relative()) mi.path = base_dir / mi.path;
    if (mi.id.empty()) mi.id = id_from_path(mi.path);
    if (!std::filesystem::exists(mi.path)) {
      manifest_error("instance file not found: " + mi.path.string());
    }
    mi.instance = load_instance(mi.path, mi.dialect);
    if (!mi.target) {
      if (const auto hit = targets.find(mi.id); hit != targets.end()) {
        mi.target = hit->second;
      }
    }
    if (!mi.reference) {
      if (const auto hit = reference.find(mi.id); hit != reference.end()) {
        mi.reference = hit->second;
      } else if (builtin_reference) {
        mi.reference = lookup_reference(mi.id);
      }
    }
    if (m.mode == "target" && !mi.target) {
      manifest_error("mode 'target' but no target for instance " + mi.id);
    }
    m.instances.push_back(std::move(mi));
  }

  auto out_path = [&](const char* key) -> std::filesystem::path {
    if (!j.contains(key)) return {};
    std::filesystem::path path = j.at(key).get<std::string>();
    return path.is_relative() ? base_dir / path : path;
  };
  m.results_path = out_path("results");
  m.summary_path = out_path("summary");
  return m;
}

Manifest load_manifest(const std::filesystem::path& path) {
  return parse_manifest(read_text_file(path), path.parent_path());
}

namespace {

ordered_json filter_to_json(const FilterSnapshot& snap) {
  ordered_json rows = ordered_json::array();
  for (const auto& entry : snap.entries) {
    ordered_json row;
    row["neighborhood"] = entry.id.name();
    if (entry.threshold) {
      row["threshold"] = *entry.threshold;
    } else {
      row["threshold"] = nullptr;
    }
    row["seen"] = entry.counters.seen;
    row["admitted"] = entry.counters.admitted;
    row["rejected"] = entry.counters.rejected;
    row["evaluated"] = entry.counters.evaluated;
    row["improving"] = entry.counters.improving;
    row["rejected_improving"] = entry.counters.rejected_improving;
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json run_to_json(const ManifestInstance& mi, std::uint64_t seed,
                         const RunReport& report) {
  ordered_json j;
  j["instance"] = mi.id;
  j["seed"] = seed;
  j["cost"] = report.best_cost;
  ordered_json order = ordered_json::array();
  for (int pos = 1; pos <= report.best_sequence.size(); ++pos) {
    order.push_back(report.best_sequence.order[pos]);
  }
  j["order"] = std::move(order);
  j["iterations"] = report.iterations;
  j["restarts"] = report.restarts;
  if (mi.target) j["target"] = *mi.target;
  j["target_hit"] = report.target_hit;

  ordered_json timing;
  timing["seconds"] = report.elapsed_seconds;
  timing["time_to_best_seconds"] = report.time_to_best_seconds;
  ordered_json per_nb;
  for (const auto& entry : report.filter.entries) {
    per_nb[entry.id.name()] = entry.counters.scan_seconds;
  }
  timing["neighborhoods"] = std::move(per_nb);
  j["timing"] = std::move(timing);

  j["filter"] = filter_to_json(report.filter);
  return j;
}

void strip_timing(ordered_json& j) {
  if (j.is_object()) {
    j.erase("timing");
    for (auto& [key, value] : j.items()) strip_timing(value);
  } else if (j.is_array()) {
    for (auto& value : j) strip_timing(value);
  }
}

std::string format_double(double value, int precision = 4) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(precision) << value;
  return out.str();
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid]
                                : 0.5 * (values[mid - 1] + values[mid]);
}

struct InstanceSummary {
  const ManifestInstance* mi = nullptr;
  std::vector<Cost> costs;
  std::vector<double> seconds;
  std::uint64_t seen = 0;
  std::uint64_t rejected = 0;
  std::uint64_t improving = 0;
  std::uint64_t rejected_improving = 0;
  int target_hits = 0;
};

std::string summary_csv(const std::vector<InstanceSummary>& summaries) {
  std::ostringstream out;
  out << "instance,n,runs,best,avg,worst,reference,best_gap_pct,avg_gap_pct,"
         "worst_gap_pct,time_mean_s,time_median_s,time_min_s,time_max_s,"
         "skipped_pct,lost_improving_pct,target_hits\n";

  std::vector<InstanceRuns> runs;
  std::map<std::string, Cost> reference;
  for (const auto& summary : summaries) {
    const auto& mi = *summary.mi;
    runs.push_back({mi.id, summary.costs, summary.seconds});
    if (mi.reference) reference[mi.id] = *mi.reference;
  }
  const GapStats gaps = compute_gaps(runs, reference);

  for (std::size_t at = 0; at < summaries.size(); ++at) {
    const auto& summary = summaries[at];
    const auto& gap = gaps.per_instance[at];
    const auto& mi = *summary.mi;
    out << mi.id << ',' << mi.instance.n << ',' << summary.costs.size() << ','
        << gap.best << ',' << format_double(gap.avg_cost) << ',' << gap.worst
        << ',';
    if (mi.reference) out << *mi.reference;
    out << ',';
    out << (gap.best_gap ? format_double(*gap.best_gap) : "") << ','
        << (gap.avg_gap ? format_double(*gap.avg_gap) : "") << ','
        << (gap.worst_gap ? format_double(*gap.worst_gap) : "") << ',';
    const double mean =
        std::accumulate(summary.seconds.begin(), summary.seconds.end(), 0.0) /
        static_cast<double>(summary.seconds.size());
    const auto [min_it, max_it] =
        std::minmax_element(summary.seconds.begin(), summary.seconds.end());
    out << format_double(mean) << ',' << format_double(median(summary.seconds))
        << ',' << format_double(*min_it) << ',' << format_double(*max_it)
        << ',';
    out << format_double(summary.seen == 0
                             ? 0.0
                             : 100.0 * static_cast<double>(summary.rejected) /
                                   static_cast<double>(summary.seen))
        << ',';
    out << format_double(summary.improving == 0
                             ? 0.0
                             : 100.0 *
                                   static_cast<double>(
                                       summary.rejected_improving) /
                                   static_cast<double>(summary.improving))
        << ',';
    out << summary.target_hits << '\n';
  }

  double mean_seconds = 0.0;
  for (const auto& summary : summaries) {
    mean_seconds += std::accumulate(summary.seconds.begin(),
                                    summary.seconds.end(), 0.0) /
                    static_cast<double>(summary.seconds.size());
  }
  mean_seconds /= static_cast<double>(summaries.size());

  out << "ALL,,,,,,,";
  if (gaps.gap_instances > 0) {
    out << format_double(gaps.arith_mean_best_gap) << ','
        << format_double(gaps.geom_mean_avg_gap) << ','
        << format_double(gaps.geom_mean_worst_gap) << ',';
  } else {
    out << ",,,";
  }
  out << format_double(mean_seconds) << ",,,,,,\n";
  return out.str();
}

}  // namespace

ExperimentOutput run_experiment(const Manifest& manifest) {
  struct Task {
    const ManifestInstance* mi;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (const auto& mi : manifest.instances) {
    for (const auto seed : manifest.seeds) tasks.push_back({&mi, seed});
  }

  std::vector<ordered_json> run_rows(tasks.size());
  std::vector<RunReport> reports(tasks.size());
  parallel_for_index(tasks.size(), manifest.threads, [&](std::size_t at) {
    const Task& task = tasks[at];
    SearchConfig cfg = manifest.config;
    cfg.seed = task.seed;
    if (manifest.mode == "target") cfg.target = task.mi->target;
    RunReport report = run_algorithm(manifest.algorithm, task.mi->instance,
                                     cfg);
    if (report.best_cost != total_cost(task.mi->instance,
                                       report.best_sequence)) {
      throw std::logic_error("report integrity: cost does not re-verify for " +
                             task.mi->id);
    }
    run_rows[at] = run_to_json(*task.mi, task.seed, report);
    reports[at] = std::move(report);
  });

  ordered_json results;
  results["schema"] = "smtwt-results-v1";
  results["algorithm"] = manifest.algorithm;
  results["mode"] = manifest.mode;
  results["config"] = config_to_json(manifest.config);
  ordered_json rows = ordered_json::array();
  for (auto& row : run_rows) rows.push_back(std::move(row));
  results["runs"] = std::move(rows);

  std::vector<InstanceSummary> summaries;
  std::size_t at = 0;
  for (const auto& mi : manifest.instances) {
    InstanceSummary summary;
    summary.mi = &mi;
    for (std::size_t s = 0; s < manifest.seeds.size(); ++s, ++at) {
      const RunReport& report = reports[at];
      summary.costs.push_back(report.best_cost);
      summary.seconds.push_back(report.elapsed_seconds);
      summary.target_hits += report.target_hit ? 1 : 0;
      for (const auto& entry : report.filter.entries) {
        summary.seen += entry.counters.seen;
        summary.rejected += entry.counters.rejected;
        summary.improving += entry.counters.improving;
        summary.rejected_improving += entry.counters.rejected_improving;
      }
    }
    summaries.push_back(std::move(summary));
  }

  ExperimentOutput output;
  output.results_json = results.dump(2) + "\n";
  output.summary_csv = summary_csv(summaries);
  if (!manifest.results_path.empty()) {
    write_text_file(manifest.results_path, output.results_json);
  }
  if (!manifest.summary_path.empty()) {
    write_text_file(manifest.summary_path, output.summary_csv);
  }
  return output;
}

std::string results_without_timing(const std::string& results_json) {
  ordered_json j = ordered_json::parse(results_json);
  strip_timing(j);
  return j.dump(2) + "\n";
}

GapStats gaps_from_results(const std::string& results_json,
                           const std::map<std::string, Cost>& reference) {
  const ordered_json j = ordered_json::parse(results_json);
  std::vector<InstanceRuns> runs;
  std::map<std::string, std::size_t> index;
  for (const auto& row : j.at("runs")) {
    const std::string id = row.at("instance").get<std::string>();
    if (!index.contains(id)) {
      index[id] = runs.size();
      runs.push_back({id, {}, {}});
    }
    auto& slot = runs[index[id]];
    slot.costs.push_back(row.at("cost").get<Cost>());
    if (row.contains("timing")) {
      slot.seconds.push_back(row.at("timing").at("seconds").get<double>());
    }
  }
  return compute_gaps(runs, reference);
}

std::map<std::string, Cost> parse_reference_map(const std::string& json_text) {
  const ordered_json j = ordered_json::parse(json_text);
  std::map<std::string, Cost> reference;
  for (const auto& [key, value] : j.items()) {
    reference[key] = value.get<Cost>();
  }
  return reference;
}

std::string render_gap_stats(const GapStats& stats) {
  std::ostringstream out;
  out << "instance,reference,best,avg,worst,best_gap_pct,avg_gap_pct,"
         "worst_gap_pct,avg_seconds\n";
  for (const auto& gap : stats.per_instance) {
    out << gap.id << ',';
    if (gap.reference) out << *gap.reference;
    out << ',' << gap.best << ',' << format_double(gap.avg_cost) << ','
        << gap.worst << ',' << (gap.best_gap ? format_double(*gap.best_gap) : "")
        << ',' << (gap.avg_gap ? format_double(*gap.avg_gap) : "") << ','
        << (gap.worst_gap ? format_double(*gap.worst_gap) : "") << ','
        << format_double(gap.avg_seconds) << '\n';
  }
  out << "arith_mean_best_gap_pct," << format_double(stats.arith_mean_best_gap)
      << '\n';
  out << "geom_mean_avg_gap_pct," << format_double(stats.geom_mean_avg_gap)
      << " (zeros dropped: " << stats.zero_avg_gaps_dropped << ")\n";
  out << "geom_mean_worst_gap_pct," << format_double(stats.geom_mean_worst_gap)
      << " (zeros dropped: " << stats.zero_worst_gaps_dropped << ")\n";
  out << "mean_avg_seconds," << format_double(stats.mean_avg_seconds) << '\n';
  out << "instances_with_gaps," << stats.gap_instances << '\n';
  out << "instances_excluded," << stats.excluded_no_reference << '\n';
  return out.str();
}

}  // namespace smtwt
