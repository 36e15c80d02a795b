#include "smtwt/local_search.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace smtwt {

namespace {

// Shared candidate-processing core of the swap and l-block scans: setup
// variation first, filter gate, bounded evaluation against the running best,
// improvement bookkeeping.
struct BestImprovementScan {
  const Instance& inst;
  const Sequence& seq;
  const EvalState& state;
  FilterState& fs;
  int nb;
  Cost best_cost;
  std::optional<MoveSpec> best_move;
  bool record;
  bool diagnostic;

  BestImprovementScan(const Instance& inst_, const Sequence& seq_,
                      const EvalState& state_, FilterState& fs_, int nb_)
      : inst(inst_),
        seq(seq_),
        state(state_),
        fs(fs_),
        nb(nb_),
        best_cost(state_.total()),
        record(fs_.learning() && fs_.recording()),
        diagnostic(fs_.diagnostic()) {}

  void consider(const MoveSpec& move) {
    auto& counters = fs.counters(nb);
    ++counters.seen;
    const Time delta = setup_variation(inst, seq, move);
    const bool admitted = fs.admits(nb, delta);
    if (admitted) {
      ++counters.admitted;
    } else {
      ++counters.rejected;
      if (!diagnostic) return;
    }
    ++counters.evaluated;
    const auto cost = comp_cost_bounded(inst, seq, state, move, best_cost);
    if (cost) {
      ++counters.improving;
      if (!admitted) ++counters.rejected_improving;
      best_cost = *cost;
      best_move = move;
      if (record) fs.record_improvement(nb, delta);
    }
  }

  ScanResult result(Cost incoming) const {
    ScanResult res;
    res.improved = best_move.has_value();
    res.best_move = best_move;
    res.best_cost = res.improved ? best_cost : incoming;
    return res;
  }
};

}  // namespace

ScanResult scan_swap(const Instance& inst, const Sequence& seq,
                     const EvalState& state, FilterState& fs, int nb) {
  const int n = seq.size();
  BestImprovementScan scan(inst, seq, state, fs, nb);
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      scan.consider({MoveKind::swap, i, j, 1});
    }
  }
  return scan.result(state.total());
}

ScanResult scan_lblock(const Instance& inst, const Sequence& seq,
                       const EvalState& state, int block_len, FilterState& fs,
                       int nb) {
  const int n = seq.size();
  if (block_len < 1 || block_len > n - 1) {
    throw std::invalid_argument("scan_lblock: block length out of range");
  }
  BestImprovementScan scan(inst, seq, state, fs, nb);
  for (int i = 1; i <= n - block_len; ++i) {
    for (int j = i + block_len; j <= n; ++j) {
      scan.consider({MoveKind::block_fwd, i, j, block_len});
    }
  }
  for (int i = 2; i <= n - block_len + 1; ++i) {
    for (int j = 1; j <= i - 1; ++j) {
      scan.consider({MoveKind::block_bwd, i, j, block_len});
    }
  }
  return scan.result(state.total());
}

ScanResult scan_neighborhood(const Instance& inst, const Sequence& seq,
                             const EvalState& state, NeighborhoodId id,
                             FilterState& fs, int nb) {
  if (id.is_swap()) return scan_swap(inst, seq, state, fs, nb);
  return scan_lblock(inst, seq, state, id.block_len, fs, nb);
}

void apply_move(const Instance& inst, Sequence& seq, EvalState& state,
                const MoveSpec& move) {
  if (!move_is_valid(move, seq.size())) {
    throw std::invalid_argument("apply_move: invalid move");
  }
  if (state.completion.size() != seq.order.size() ||
      state.cum_cost.size() != seq.order.size()) {
    throw std::logic_error("apply_move: state does not match sequence");
  }
  auto first = seq.order.begin();
  int repair_from = 0;
  switch (move.kind) {
    case MoveKind::swap:
      std::swap(seq.order[move.i], seq.order[move.j]);
      repair_from = move.i;
      break;
    case MoveKind::block_fwd:
      std::rotate(first + move.i, first + move.i + move.len,
                  first + move.j + 1);
      repair_from = move.i;
      break;
    case MoveKind::block_bwd:
      std::rotate(first + move.j, first + move.i, first + move.i + move.len);
      repair_from = move.j;
      break;
  }
  recompute_prefixes_from(inst, seq, state, repair_from);
  assert(eval_state_consistent(inst, seq, state));
}

Cost rvnd(const Instance& inst, Sequence& seq, EvalState& state,
          FilterState& fs, Rng& rng) {
  if (state.total() == 0) return 0;
  const int count = fs.neighborhood_count();
  std::vector<int> remaining(count);
  std::iota(remaining.begin(), remaining.end(), 0);
  while (!remaining.empty()) {
    const int pick = rng.next_index(static_cast<int>(remaining.size()));
    const int nb = remaining[pick];
    const auto start = std::chrono::steady_clock::now();
    const ScanResult res =
        scan_neighborhood(inst, seq, state, fs.neighborhoods()[nb], fs, nb);
    fs.counters(nb).scan_seconds +=
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (res.improved) {
      apply_move(inst, seq, state, *res.best_move);
      assert(state.total() == res.best_cost);
      if (state.total() == 0) return 0;
      remaining.resize(count);
      std::iota(remaining.begin(), remaining.end(), 0);
    } else {
      remaining.erase(remaining.begin() + pick);
    }
  }
  return state.total();
}

}  // namespace smtwt
