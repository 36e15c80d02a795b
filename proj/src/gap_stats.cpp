#include "smtwt/gap_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace smtwt {

double geometric_mean(const std::vector<double>& values, int* dropped) {
  long double log_sum = 0.0L;
  int kept = 0;
  int skipped = 0;
  for (const double value : values) {
    if (value < 0.0) {
      throw std::invalid_argument("geometric_mean: negative value");
    }
    if (value == 0.0) {
      ++skipped;
      continue;
    }
    log_sum += std::log(static_cast<long double>(value));
    ++kept;
  }
  if (dropped) *dropped = skipped;
  if (kept == 0) return 0.0;
  return static_cast<double>(std::exp(log_sum / kept));
}

GapStats compute_gaps(const std::vector<InstanceRuns>& runs,
                      const std::map<std::string, Cost>& reference) {
  GapStats stats;
  std::vector<double> best_gaps, avg_gaps, worst_gaps, avg_times;

  for (const auto& run : runs) {
    if (run.costs.empty()) {
      throw std::invalid_argument("compute_gaps: no costs for instance " +
                                  run.id);
    }
    InstanceGap gap;
    gap.id = run.id;
    gap.best = *std::min_element(run.costs.begin(), run.costs.end());
    gap.worst = *std::max_element(run.costs.begin(), run.costs.end());
    gap.avg_cost = static_cast<double>(std::accumulate(
                       run.costs.begin(), run.costs.end(), Cost{0})) /
                   static_cast<double>(run.costs.size());
    if (!run.seconds.empty()) {
      gap.avg_seconds = std::accumulate(run.seconds.begin(), run.seconds.end(),
                                        0.0) /
                        static_cast<double>(run.seconds.size());
    }

    const auto ref = reference.find(run.id);
    if (ref != reference.end()) gap.reference = ref->second;
    if (gap.reference && *gap.reference > 0) {
      const auto opt = static_cast<double>(*gap.reference);
      gap.best_gap = 100.0 * (static_cast<double>(gap.best) - opt) / opt;
      gap.avg_gap = 100.0 * (gap.avg_cost - opt) / opt;
      gap.worst_gap = 100.0 * (static_cast<double>(gap.worst) - opt) / opt;
      best_gaps.push_back(*gap.best_gap);
      avg_gaps.push_back(*gap.avg_gap);
      worst_gaps.push_back(*gap.worst_gap);
      avg_times.push_back(gap.avg_seconds);
      ++stats.gap_instances;
    } else {
      ++stats.excluded_no_reference;
    }
    stats.per_instance.push_back(std::move(gap));
  }

  if (!best_gaps.empty()) {
    stats.arith_mean_best_gap =
        std::accumulate(best_gaps.begin(), best_gaps.end(), 0.0) /
        static_cast<double>(best_gaps.size());
    stats.geom_mean_avg_gap =
        geometric_mean(avg_gaps, &stats.zero_avg_gaps_dropped);
    stats.geom_mean_worst_gap =
        geometric_mean(worst_gaps, &stats.zero_worst_gaps_dropped);
    stats.mean_avg_seconds =
        std::accumulate(avg_times.begin(), avg_times.end(), 0.0) /
        static_cast<double>(avg_times.size());
  }
  return stats;
}

}  // namespace smtwt
