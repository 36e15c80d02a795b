#ifndef SMTWT_SEQUENCE_HPP
#define SMTWT_SEQUENCE_HPP

#include <vector>

#include "smtwt/instance.hpp"

namespace smtwt {

// A schedule: order[0] is always the dummy job 0, order[1..n] is a
// permutation of {1..n}. Moves are expressed in positions, never job ids.
struct Sequence {
  std::vector<int> order;

  Sequence() = default;
  static Sequence identity(int n) {
    Sequence seq;
    seq.order.resize(n + 1);
    for (int k = 0; k <= n; ++k) seq.order[k] = k;
    return seq;
  }

  int size() const { return static_cast<int>(order.size()) - 1; }
  int job_at(int pos) const { return order[pos]; }

  bool is_valid_for(const Instance& inst) const;
};

// Prefix arrays over a sequence: completion[k] is the completion time of the
// job at position k and cum_cost[k] the weighted tardiness accumulated up to
// and including position k. completion[0] = cum_cost[0] = 0.
struct EvalState {
  std::vector<Time> completion;
  std::vector<Cost> cum_cost;

  Cost total() const { return cum_cost.back(); }
};

// Total weighted tardiness of the full sequence, one left-to-right pass.
Cost total_cost(const Instance& inst, const Sequence& seq);

// Sum of the setup times paid along the sequence, dummy edge included.
Time total_setup(const Instance& inst, const Sequence& seq);

EvalState recompute_prefixes(const Instance& inst, const Sequence& seq);

// Repairs state entries at positions >= first_pos, assuming everything
// strictly before first_pos is still valid. first_pos >= 1.
void recompute_prefixes_from(const Instance& inst, const Sequence& seq,
                             EvalState& state, int first_pos);

// True when state matches what recompute_prefixes would produce for seq.
bool eval_state_consistent(const Instance& inst, const Sequence& seq,
                           const EvalState& state);

}  // namespace smtwt

#endif
