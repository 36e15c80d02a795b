#include "smtwt/filter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace smtwt {

std::string NeighborhoodId::name() const {
  if (is_swap()) return "swap";
  return std::to_string(block_len) + "-block";
}

bool same_evaluation_counts(const NeighborhoodCounters& a,
                            const NeighborhoodCounters& b) {
  return a.seen == b.seen && a.admitted == b.admitted &&
         a.rejected == b.rejected && a.evaluated == b.evaluated &&
         a.improving == b.improving &&
         a.rejected_improving == b.rejected_improving;
}

FilterState::FilterState(std::vector<NeighborhoodId> neighborhoods,
                         FilterMode mode)
    : ids_(std::move(neighborhoods)),
      deltas_(ids_.size()),
      thresholds_(ids_.size()),
      counters_(ids_.size()),
      mode_(mode) {
  if (ids_.empty()) {
    throw std::invalid_argument("FilterState: empty neighborhood set");
  }
}

void FilterState::require_known(int nb) const {
  if (nb < 0 || nb >= static_cast<int>(ids_.size())) {
    throw std::out_of_range("FilterState: unknown neighborhood id " +
                            std::to_string(nb));
  }
}

bool FilterState::admits(int nb, Time delta_s) const {
  require_known(nb);
  const auto& threshold = thresholds_[nb];
  if (!threshold) return true;  // sentinel M
  return delta_s <= *threshold;
}

void FilterState::record_improvement(int nb, Time delta_s) {
  require_known(nb);
  if (mode_ != FilterMode::learning) {
    throw std::logic_error(
        "FilterState: record_improvement outside the learning phase");
  }
  deltas_[nb].push_back(delta_s);
}

void FilterState::finalize_thresholds(double theta) {
  if (finalized_ || mode_ != FilterMode::learning) {
    throw std::logic_error(
        "FilterState: finalize_thresholds requires an active learning phase");
  }
  if (theta < 0.0 || theta > 1.0) {
    throw std::invalid_argument("FilterState: theta must be in [0, 1]");
  }
  for (std::size_t nb = 0; nb < ids_.size(); ++nb) {
    auto& list = deltas_[nb];
    std::sort(list.begin(), list.end());
    if (list.empty()) continue;  // threshold stays M
    const auto size = static_cast<std::int64_t>(list.size());
    std::int64_t pos = static_cast<std::int64_t>(
        std::floor(theta * static_cast<double>(size)));
    pos = std::clamp<std::int64_t>(pos, 1, size);
    thresholds_[nb] = list[pos - 1];
  }
  mode_ = FilterMode::filtering;
  finalized_ = true;
}

std::optional<Time> FilterState::threshold(int nb) const {
  require_known(nb);
  return thresholds_[nb];
}

const std::vector<Time>& FilterState::deltas(int nb) const {
  require_known(nb);
  return deltas_[nb];
}

NeighborhoodCounters& FilterState::counters(int nb) {
  require_known(nb);
  return counters_[nb];
}

const NeighborhoodCounters& FilterState::counters(int nb) const {
  require_known(nb);
  return counters_[nb];
}

namespace {

double pct(std::uint64_t part, std::uint64_t whole) {
  return whole == 0 ? 0.0
                    : 100.0 * static_cast<double>(part) /
                          static_cast<double>(whole);
}

}  // namespace

FilterStats filter_stats(const FilterState& fs) {
  FilterStats stats;
  for (int nb = 0; nb < fs.neighborhood_count(); ++nb) {
    const auto& c = fs.counters(nb);
    FilterStats::Row row;
    row.neighborhood = fs.neighborhoods()[nb].name();
    row.threshold = fs.threshold(nb);
    row.counters = c;
    row.skipped_pct = pct(c.rejected, c.seen);
    row.lost_improving_pct = pct(c.rejected_improving, c.improving);
    stats.rows.push_back(std::move(row));
    stats.seen += c.seen;
    stats.admitted += c.admitted;
    stats.rejected += c.rejected;
    stats.evaluated += c.evaluated;
    stats.improving += c.improving;
    stats.rejected_improving += c.rejected_improving;
  }
  stats.skipped_pct = pct(stats.rejected, stats.seen);
  stats.lost_improving_pct = pct(stats.rejected_improving, stats.improving);
  return stats;
}

}  // namespace smtwt
