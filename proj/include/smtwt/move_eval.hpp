#ifndef SMTWT_MOVE_EVAL_HPP
#define SMTWT_MOVE_EVAL_HPP

#include <optional>

#include "smtwt/sequence.hpp"

namespace smtwt {

enum class MoveKind { swap, block_fwd, block_bwd };

// A candidate move in position space.
//   swap:      exchange positions i and j, 1 <= i < j <= n (len unused, 1).
//   block_fwd: move the block at [i, i+len-1] so it lands right after the
//              job currently at position j, with i+len <= j <= n.
//   block_bwd: move the same block backward, reinserting it right before the
//              job currently at position j, with 2 <= i, 1 <= j <= i-1.
struct MoveSpec {
  MoveKind kind = MoveKind::swap;
  int i = 0;
  int j = 0;
  int len = 1;
};

bool move_is_valid(const MoveSpec& move, int n);

// One maximal run of consecutive positions of the *current* sequence,
// evaluated as part of a candidate. pred_pos is the position whose job
// immediately precedes the span in the candidate order. An empty span
// (last_pos < first_pos) contributes nothing and leaves the running
// completion time untouched.
struct BlockSpan {
  int pred_pos = 0;
  int first_pos = 1;
  int last_pos = 0;
};

// Weighted tardiness of the span's jobs in candidate order. running holds
// the completion time of the job at pred_pos on entry and the completion
// time of the job at last_pos on exit.
Cost comp_cost_block(const Instance& inst, const Sequence& seq,
                     const BlockSpan& span, Time& running);

// Incremental candidate costs via block decomposition. Each starts from the
// prefix arrays and touches only positions from the first affected one
// onward: O(n-i) for swap and forward moves, O(n-j) for backward moves.
// None of them mutates seq or state.
Cost comp_cost_swap(const Instance& inst, const Sequence& seq,
                    const EvalState& state, int i, int j);
Cost comp_cost_lblock_fwd(const Instance& inst, const Sequence& seq,
                          const EvalState& state, int i, int j, int len);
Cost comp_cost_lblock_bwd(const Instance& inst, const Sequence& seq,
                          const EvalState& state, int i, int j, int len);

// Cutoff-aware variants: return the exact candidate cost whenever it is
// strictly below cutoff, nullopt once the partial cost reaches cutoff.
std::optional<Cost> comp_cost_swap_bounded(const Instance& inst,
                                           const Sequence& seq,
                                           const EvalState& state, int i,
                                           int j, Cost cutoff);
std::optional<Cost> comp_cost_lblock_fwd_bounded(const Instance& inst,
                                                 const Sequence& seq,
                                                 const EvalState& state, int i,
                                                 int j, int len, Cost cutoff);
std::optional<Cost> comp_cost_lblock_bwd_bounded(const Instance& inst,
                                                 const Sequence& seq,
                                                 const EvalState& state, int i,
                                                 int j, int len, Cost cutoff);

std::optional<Cost> comp_cost_bounded(const Instance& inst,
                                      const Sequence& seq,
                                      const EvalState& state,
                                      const MoveSpec& move, Cost cutoff);
Cost comp_cost(const Instance& inst, const Sequence& seq,
               const EvalState& state, const MoveSpec& move);

// Change in the total setup time caused by the move, from the handful of
// matrix lookups for the replaced edges. Edges past position n count as 0.
Time setup_variation(const Instance& inst, const Sequence& seq,
                     const MoveSpec& move);

}  // namespace smtwt

#endif
