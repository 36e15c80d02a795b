#include "smtwt/sequence.hpp"

#include <algorithm>

namespace smtwt {

bool Sequence::is_valid_for(const Instance& inst) const {
  if (static_cast<int>(order.size()) != inst.n + 1) return false;
  if (order[0] != 0) return false;
  std::vector<char> seen(inst.n + 1, 0);
  for (int k = 1; k <= inst.n; ++k) {
    const int job = order[k];
    if (job < 1 || job > inst.n || seen[job]) return false;
    seen[job] = 1;
  }
  return true;
}

Cost total_cost(const Instance& inst, const Sequence& seq) {
  Cost cost = 0;
  Time completion = 0;
  for (int k = 1; k <= inst.n; ++k) {
    const int job = seq.order[k];
    completion += inst.setup(seq.order[k - 1], job) + inst.p[job];
    if (completion > inst.d[job]) {
      cost += inst.w[job] * (completion - inst.d[job]);
    }
  }
  return cost;
}

Time total_setup(const Instance& inst, const Sequence& seq) {
  Time sum = 0;
  for (int k = 1; k <= inst.n; ++k) {
    sum += inst.setup(seq.order[k - 1], seq.order[k]);
  }
  return sum;
}

EvalState recompute_prefixes(const Instance& inst, const Sequence& seq) {
  EvalState state;
  state.completion.assign(inst.n + 1, 0);
  state.cum_cost.assign(inst.n + 1, 0);
  recompute_prefixes_from(inst, seq, state, 1);
  return state;
}

void recompute_prefixes_from(const Instance& inst, const Sequence& seq,
                             EvalState& state, int first_pos) {
  for (int k = first_pos; k <= inst.n; ++k) {
    const int job = seq.order[k];
    state.completion[k] =
        state.completion[k - 1] + inst.setup(seq.order[k - 1], job) +
        inst.p[job];
    const Time late = state.completion[k] - inst.d[job];
    state.cum_cost[k] =
        state.cum_cost[k - 1] + (late > 0 ? inst.w[job] * late : 0);
  }
}

bool eval_state_consistent(const Instance& inst, const Sequence& seq,
                           const EvalState& state) {
  if (static_cast<int>(state.completion.size()) != inst.n + 1 ||
      static_cast<int>(state.cum_cost.size()) != inst.n + 1) {
    return false;
  }
  if (state.completion[0] != 0 || state.cum_cost[0] != 0) return false;
  const EvalState fresh = recompute_prefixes(inst, seq);
  return std::equal(fresh.completion.begin(), fresh.completion.end(),
                    state.completion.begin()) &&
         std::equal(fresh.cum_cost.begin(), fresh.cum_cost.end(),
                    state.cum_cost.begin());
}

}  // namespace smtwt
