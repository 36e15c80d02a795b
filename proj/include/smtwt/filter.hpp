#ifndef SMTWT_FILTER_HPP
#define SMTWT_FILTER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "smtwt/instance.hpp"

namespace smtwt {

// One neighborhood of the configured set: swap or l-block insertion.
// Forward and backward l-block moves share one id (and one threshold).
struct NeighborhoodId {
  int block_len = 0;  // 0 = swap, >= 1 = l-block insertion

  bool is_swap() const { return block_len == 0; }
  std::string name() const;
  friend bool operator==(const NeighborhoodId&, const NeighborhoodId&) =
      default;
};

enum class FilterMode {
  off,        // plain search: every move admitted, nothing recorded
  learning,   // every move admitted, improving-move setup variations recorded
  filtering,  // thresholds frozen, moves gated by admits()
};

struct NeighborhoodCounters {
  std::uint64_t seen = 0;
  std::uint64_t admitted = 0;
  std::uint64_t rejected = 0;
  std::uint64_t evaluated = 0;
  std::uint64_t improving = 0;
  std::uint64_t rejected_improving = 0;  // diagnostic mode only
  double scan_seconds = 0.0;
};

// Equality of the evaluation counters; the wall-clock field is not part of
// any determinism contract.
bool same_evaluation_counts(const NeighborhoodCounters& a,
                            const NeighborhoodCounters& b);

// Per-run state of the setup-variation limitation strategy. A threshold of
// nullopt is the sentinel M: the neighborhood is unfiltered. Thresholds stay
// at M while learning and are frozen once by finalize_thresholds; recording
// or finalizing afterwards is a caller bug and throws.
class FilterState {
 public:
  FilterState(std::vector<NeighborhoodId> neighborhoods, FilterMode mode);

  int neighborhood_count() const { return static_cast<int>(ids_.size()); }
  const std::vector<NeighborhoodId>& neighborhoods() const { return ids_; }

  FilterMode mode() const { return mode_; }
  bool learning() const { return mode_ == FilterMode::learning; }

  // True iff delta_s <= threshold; always true while the threshold is M.
  bool admits(int nb, Time delta_s) const;

  void record_improvement(int nb, Time delta_s);

  // Sorts each delta list ascending and freezes the threshold at the value
  // in 1-based position floor(theta * list size), clamped to [1, size].
  // Empty lists keep the sentinel M.
  void finalize_thresholds(double theta);

  std::optional<Time> threshold(int nb) const;
  const std::vector<Time>& deltas(int nb) const;

  // Diagnostic runs evaluate every candidate and only tag what the filter
  // would have rejected; the search must consult this flag.
  void set_diagnostic(bool on) { diagnostic_ = on; }
  bool diagnostic() const { return diagnostic_; }

  // When recording is off, scans skip record_improvement entirely, so every
  // delta list stays empty and finalize_thresholds leaves all thresholds at
  // M. Used to compare the filtered driver against the plain one.
  void set_recording(bool on) { recording_ = on; }
  bool recording() const { return recording_; }

  NeighborhoodCounters& counters(int nb);
  const NeighborhoodCounters& counters(int nb) const;
  const std::vector<NeighborhoodCounters>& all_counters() const {
    return counters_;
  }

 private:
  void require_known(int nb) const;

  std::vector<NeighborhoodId> ids_;
  std::vector<std::vector<Time>> deltas_;
  std::vector<std::optional<Time>> thresholds_;
  std::vector<NeighborhoodCounters> counters_;
  FilterMode mode_;
  bool finalized_ = false;
  bool diagnostic_ = false;
  bool recording_ = true;
};

// Aggregated view of the counters for reports.
struct FilterStats {
  struct Row {
    std::string neighborhood;
    std::optional<Time> threshold;
    NeighborhoodCounters counters;
    double skipped_pct = 0.0;          // rejected / seen
    double lost_improving_pct = 0.0;   // rejected_improving / improving
  };
  std::vector<Row> rows;
  std::uint64_t seen = 0;
  std::uint64_t admitted = 0;
  std::uint64_t rejected = 0;
  std::uint64_t evaluated = 0;
  std::uint64_t improving = 0;
  std::uint64_t rejected_improving = 0;
  double skipped_pct = 0.0;
  double lost_improving_pct = 0.0;
};

FilterStats filter_stats(const FilterState& fs);

}  // namespace smtwt

#endif
