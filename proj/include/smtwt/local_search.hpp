#ifndef SMTWT_LOCAL_SEARCH_HPP
#define SMTWT_LOCAL_SEARCH_HPP

#include <optional>

#include "smtwt/filter.hpp"
#include "smtwt/move_eval.hpp"
#include "smtwt/rng.hpp"

namespace smtwt {

struct ScanResult {
  std::optional<MoveSpec> best_move;
  Cost best_cost = 0;
  bool improved = false;
};

// Best-improvement scan of the swap neighborhood. For every candidate the
// setup variation is computed first and the full cost only when the filter
// admits it (or in diagnostic mode). Improving moves found while the filter
// is learning get their setup variation recorded. nb is the index of this
// neighborhood inside fs.
ScanResult scan_swap(const Instance& inst, const Sequence& seq,
                     const EvalState& state, FilterState& fs, int nb);

// Same, over forward then backward l-block insertions. Both directions share
// the neighborhood's delta list and threshold.
ScanResult scan_lblock(const Instance& inst, const Sequence& seq,
                       const EvalState& state, int block_len, FilterState& fs,
                       int nb);

ScanResult scan_neighborhood(const Instance& inst, const Sequence& seq,
                             const EvalState& state, NeighborhoodId id,
                             FilterState& fs, int nb);

// Materializes the move on seq and repairs the prefix arrays from the first
// affected position onward. The repaired state is checked against a full
// recompute in debug builds.
void apply_move(const Instance& inst, Sequence& seq, EvalState& state,
                const MoveSpec& move);

// Randomized VND over the neighborhoods configured in fs: draws a random
// not-yet-failed neighborhood, applies its best admitted move if improving
// (which resets the failed set), otherwise marks it failed. Returns the cost
// of the resulting local optimum. Scan wall time is accumulated into the
// per-neighborhood counters.
Cost rvnd(const Instance& inst, Sequence& seq, EvalState& state,
          FilterState& fs, Rng& rng);

}  // namespace smtwt

#endif
