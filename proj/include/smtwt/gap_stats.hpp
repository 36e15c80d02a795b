#ifndef SMTWT_GAP_STATS_HPP
#define SMTWT_GAP_STATS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smtwt/instance.hpp"

namespace smtwt {

// Costs and times of the repeated runs on one instance.
struct InstanceRuns {
  std::string id;
  std::vector<Cost> costs;
  std::vector<double> seconds;
};

struct InstanceGap {
  std::string id;
  std::optional<Cost> reference;
  Cost best = 0;
  Cost worst = 0;
  double avg_cost = 0.0;
  double avg_seconds = 0.0;
  // Percent gaps vs the reference; absent when the reference is missing or
  // zero (gap undefined), in which case the instance is excluded from the
  // aggregates and counted in excluded_no_reference.
  std::optional<double> best_gap;
  std::optional<double> avg_gap;
  std::optional<double> worst_gap;
};

// Aggregation scheme of the tuning tables: arithmetic mean of the best gaps
// (zeros included), geometric means of the average and worst gaps (zeros
// disregarded and counted), arithmetic mean of the average times.
struct GapStats {
  std::vector<InstanceGap> per_instance;
  double arith_mean_best_gap = 0.0;
  double geom_mean_avg_gap = 0.0;
  double geom_mean_worst_gap = 0.0;
  double mean_avg_seconds = 0.0;
  int gap_instances = 0;           // instances entering the aggregates
  int excluded_no_reference = 0;   // missing or zero reference
  int zero_avg_gaps_dropped = 0;   // zeros skipped by the geometric means
  int zero_worst_gaps_dropped = 0;
};

GapStats compute_gaps(const std::vector<InstanceRuns>& runs,
                      const std::map<std::string, Cost>& reference);

// qth root of the product of the positive values; zeros are skipped and
// counted into dropped. Returns 0 when no positive value remains.
double geometric_mean(const std::vector<double>& values, int* dropped);

}  // namespace smtwt

#endif
