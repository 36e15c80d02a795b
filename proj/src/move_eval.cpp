#include "smtwt/move_eval.hpp"

namespace smtwt {

bool move_is_valid(const MoveSpec& move, int n) {
  switch (move.kind) {
    case MoveKind::swap:
      return 1 <= move.i && move.i < move.j && move.j <= n;
    case MoveKind::block_fwd:
      return move.len >= 1 && move.i >= 1 && move.i + move.len - 1 <= n &&
             move.i + move.len <= move.j && move.j <= n;
    case MoveKind::block_bwd:
      return move.len >= 1 && move.i >= 2 && move.i + move.len - 1 <= n &&
             1 <= move.j && move.j <= move.i - 1;
  }
  return false;
}

Cost comp_cost_block(const Instance& inst, const Sequence& seq,
                     const BlockSpan& span, Time& running) {
  if (span.last_pos < span.first_pos) return 0;
  Cost cost = 0;
  Time completion = running;
  int prev_job = seq.order[span.pred_pos];
  for (int pos = span.first_pos; pos <= span.last_pos; ++pos) {
    const int job = seq.order[pos];
    completion += inst.setup(prev_job, job) + inst.p[job];
    const Time late = completion - inst.d[job];
    if (late > 0) cost += inst.w[job] * late;
    prev_job = job;
  }
  running = completion;
  return cost;
}

namespace {

// Cutoff-aware span evaluation; false means cost hit the cutoff and the
// caller should abandon the candidate.
bool add_block_bounded(const Instance& inst, const Sequence& seq,
                       const BlockSpan& span, Time& running, Cost& cost,
                       Cost cutoff) {
  if (span.last_pos < span.first_pos) return cost < cutoff;
  Time completion = running;
  int prev_job = seq.order[span.pred_pos];
  for (int pos = span.first_pos; pos <= span.last_pos; ++pos) {
    const int job = seq.order[pos];
    completion += inst.setup(prev_job, job) + inst.p[job];
    const Time late = completion - inst.d[job];
    if (late > 0) {
      cost += inst.w[job] * late;
      if (cost >= cutoff) return false;
    }
    prev_job = job;
  }
  running = completion;
  return true;
}

}  // namespace

// Candidate order: pi_1..pi_{i-1}, pi_j, pi_{i+1}..pi_{j-1}, pi_i,
// pi_{j+1}..pi_n. When j == i+1, the interior span is empty and pi_i is
// preceded by pi_j itself, not by the job at position j-1.
Cost comp_cost_swap(const Instance& inst, const Sequence& seq,
                    const EvalState& state, int i, int j) {
  const int n = seq.size();
  Cost f = state.cum_cost[i - 1];
  Time running = state.completion[i - 1];
  f += comp_cost_block(inst, seq, {i - 1, j, j}, running);
  f += comp_cost_block(inst, seq, {j, i + 1, j - 1}, running);
  f += comp_cost_block(inst, seq, {j == i + 1 ? j : j - 1, i, i}, running);
  f += comp_cost_block(inst, seq, {i, j + 1, n}, running);
  return f;
}

// Candidate order: pi_1..pi_{i-1}, pi_{i+l}..pi_j, pi_i..pi_{i+l-1},
// pi_{j+1}..pi_n.
Cost comp_cost_lblock_fwd(const Instance& inst, const Sequence& seq,
                          const EvalState& state, int i, int j, int len) {
  const int n = seq.size();
  Cost f = state.cum_cost[i - 1];
  Time running = state.completion[i - 1];
  f += comp_cost_block(inst, seq, {i - 1, i + len, j}, running);
  f += comp_cost_block(inst, seq, {j, i, i + len - 1}, running);
  f += comp_cost_block(inst, seq, {i + len - 1, j + 1, n}, running);
  return f;
}

// Candidate order: pi_1..pi_{j-1}, pi_i..pi_{i+l-1}, pi_j..pi_{i-1},
// pi_{i+l}..pi_n.
Cost comp_cost_lblock_bwd(const Instance& inst, const Sequence& seq,
                          const EvalState& state, int i, int j, int len) {
  const int n = seq.size();
  Cost f = state.cum_cost[j - 1];
  Time running = state.completion[j - 1];
  f += comp_cost_block(inst, seq, {j - 1, i, i + len - 1}, running);
  f += comp_cost_block(inst, seq, {i + len - 1, j, i - 1}, running);
  f += comp_cost_block(inst, seq, {i - 1, i + len, n}, running);
  return f;
}

std::optional<Cost> comp_cost_swap_bounded(const Instance& inst,
                                           const Sequence& seq,
                                           const EvalState& state, int i,
                                           int j, Cost cutoff) {
  const int n = seq.size();
  Cost f = state.cum_cost[i - 1];
  if (f >= cutoff) return std::nullopt;
  Time running = state.completion[i - 1];
  if (!add_block_bounded(inst, seq, {i - 1, j, j}, running, f, cutoff))
    return std::nullopt;
  if (!add_block_bounded(inst, seq, {j, i + 1, j - 1}, running, f, cutoff))
    return std::nullopt;
  if (!add_block_bounded(inst, seq, {j == i + 1 ? j : j - 1, i, i}, running, f,
                         cutoff))
    return std::nullopt;
  if (!add_block_bounded(inst, seq, {i, j + 1, n}, running, f, cutoff))
    return std::nullopt;
  return f;
}

std::optional<Cost> comp_cost_lblock_fwd_bounded(const Instance& inst,
                                                 const Sequence& seq,
                                                 const EvalState& state, int i,
                                                 int j, int len, Cost cutoff) {
  const int n = seq.size();
  Cost f = state.cum_cost[i - 1];
  if (f >= cutoff) return std::nullopt;
  Time running = state.completion[i - 1];
  if (!add_block_bounded(inst, seq, {i - 1, i + len, j}, running, f, cutoff))
    return std::nullopt;
  if (!add_block_bounded(inst, seq, {j, i, i + len - 1}, running, f, cutoff))
    return std::nullopt;
  if (!add_block_bounded(inst, seq, {i + len - 1, j + 1, n}, running, f,
                         cutoff))
    return std::nullopt;
  return f;
}

std::optional<Cost> comp_cost_lblock_bwd_bounded(const Instance& inst,
                                                 const Sequence& seq,
                                                 const EvalState& state, int i,
                                                 int j, int len, Cost cutoff) {
  const int n = seq.size();
  Cost f = state.cum_cost[j - 1];
  if (f >= cutoff) return std::nullopt;
  Time running = state.completion[j - 1];
  if (!add_block_bounded(inst, seq, {j - 1, i, i + len - 1}, running, f,
                         cutoff))
    return std::nullopt;
  if (!add_block_bounded(inst, seq, {i + len - 1, j, i - 1}, running, f,
                         cutoff))
    return std::nullopt;
  if (!add_block_bounded(inst, seq, {i - 1, i + len, n}, running, f, cutoff))
    return std::nullopt;
  return f;
}

std::optional<Cost> comp_cost_bounded(const Instance& inst,
                                      const Sequence& seq,
                                      const EvalState& state,
                                      const MoveSpec& move, Cost cutoff) {
  switch (move.kind) {
    case MoveKind::swap:
      return comp_cost_swap_bounded(inst, seq, state, move.i, move.j, cutoff);
    case MoveKind::block_fwd:
      return comp_cost_lblock_fwd_bounded(inst, seq, state, move.i, move.j,
                                          move.len, cutoff);
    case MoveKind::block_bwd:
      return comp_cost_lblock_bwd_bounded(inst, seq, state, move.i, move.j,
                                          move.len, cutoff);
  }
  return std::nullopt;
}

Cost comp_cost(const Instance& inst, const Sequence& seq,
               const EvalState& state, const MoveSpec& move) {
  switch (move.kind) {
    case MoveKind::swap:
      return comp_cost_swap(inst, seq, state, move.i, move.j);
    case MoveKind::block_fwd:
      return comp_cost_lblock_fwd(inst, seq, state, move.i, move.j, move.len);
    case MoveKind::block_bwd:
      return comp_cost_lblock_bwd(inst, seq, state, move.i, move.j, move.len);
  }
  return 0;
}

Time setup_variation(const Instance& inst, const Sequence& seq,
                     const MoveSpec& move) {
  const auto& o = seq.order;
  const int n = seq.size();
  const int i = move.i;
  const int j = move.j;
  const int l = move.len;

  switch (move.kind) {
    case MoveKind::swap: {
      if (j == i + 1) {
        // Adjacent swap replaces 3 edges, not 4: the shared edge (i, j)
        // reverses direction. The generic formula below would read s[x][x].
        Time delta = -inst.setup(o[i - 1], o[i]) - inst.setup(o[i], o[j]) +
                     inst.setup(o[i - 1], o[j]) + inst.setup(o[j], o[i]);
        if (j < n) {
          delta += inst.setup(o[i], o[j + 1]) - inst.setup(o[j], o[j + 1]);
        }
        return delta;
      }
      Time delta = -inst.setup(o[i - 1], o[i]) - inst.setup(o[i], o[i + 1]) -
                   inst.setup(o[j - 1], o[j]) + inst.setup(o[i - 1], o[j]) +
                   inst.setup(o[j], o[i + 1]) + inst.setup(o[j - 1], o[i]);
      if (j < n) {
        delta += inst.setup(o[i], o[j + 1]) - inst.setup(o[j], o[j + 1]);
      }
      return delta;
    }
    case MoveKind::block_fwd: {
      Time delta = -inst.setup(o[i - 1], o[i]) -
                   inst.setup(o[i + l - 1], o[i + l]) +
                   inst.setup(o[i - 1], o[i + l]) + inst.setup(o[j], o[i]);
      if (j < n) {
        delta +=
            inst.setup(o[i + l - 1], o[j + 1]) - inst.setup(o[j], o[j + 1]);
      }
      return delta;
    }
    case MoveKind::block_bwd: {
      Time delta = -inst.setup(o[j - 1], o[j]) - inst.setup(o[i - 1], o[i]) +
                   inst.setup(o[j - 1], o[i]) +
                   inst.setup(o[i + l - 1], o[j]);
      if (i + l <= n) {
        delta +=
            inst.setup(o[i - 1], o[i + l]) - inst.setup(o[i + l - 1], o[i + l]);
      }
      return delta;
    }
  }
  return 0;
}

}  // namespace smtwt
