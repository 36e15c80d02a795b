#include "smtwt/oracle.hpp"

#include <limits>
#include <stdexcept>

namespace smtwt {

namespace {

struct BruteForce {
  const Instance& inst;
  bool prune;
  std::vector<char> used;
  std::vector<int> current;
  Cost best_cost = std::numeric_limits<Cost>::max();
  std::vector<int> best_order;
  std::uint64_t nodes = 0;

  BruteForce(const Instance& instance, bool prune_flag)
      : inst(instance),
        prune(prune_flag),
        used(instance.n + 1, 0),
        current(instance.n + 1, 0) {}

  void dfs(int pos, Time completion, Cost cost) {
    if (pos > inst.n) {
      if (cost < best_cost) {
        best_cost = cost;
        best_order = current;
      }
      return;
    }
    for (int job = 1; job <= inst.n; ++job) {
      if (used[job]) continue;
      const Time done =
          completion + inst.setup(current[pos - 1], job) + inst.p[job];
      const Time late = done - inst.d[job];
      const Cost next_cost = cost + (late > 0 ? inst.w[job] * late : 0);
      if (prune && next_cost >= best_cost) continue;
      ++nodes;
      used[job] = 1;
      current[pos] = job;
      dfs(pos + 1, done, next_cost);
      used[job] = 0;
    }
  }
};

}  // namespace

OracleResult exact_bruteforce(const Instance& inst, bool prune) {
  if (inst.n < 1) throw std::invalid_argument("exact_bruteforce: empty instance");
  if (inst.n > 12) {
    throw std::invalid_argument(
        "exact_bruteforce: refusing n > 12 (permutation count too large)");
  }
  BruteForce search(inst, prune);
  search.dfs(1, 0, 0);
  OracleResult result;
  result.opt_cost = search.best_cost;
  result.opt_sequence.order = search.best_order;
  result.nodes_explored = search.nodes;
  return result;
}

Sequence materialize_naive(const Sequence& seq, const MoveSpec& move) {
  const auto& o = seq.order;
  const int n = seq.size();
  Sequence out;
  out.order.reserve(o.size());
  out.order.push_back(0);
  auto append = [&](int from, int to) {
    for (int pos = from; pos <= to; ++pos) out.order.push_back(o[pos]);
  };
  switch (move.kind) {
    case MoveKind::swap:
      append(1, move.i - 1);
      out.order.push_back(o[move.j]);
      append(move.i + 1, move.j - 1);
      out.order.push_back(o[move.i]);
      append(move.j + 1, n);
      break;
    case MoveKind::block_fwd:
      append(1, move.i - 1);
      append(move.i + move.len, move.j);
      append(move.i, move.i + move.len - 1);
      append(move.j + 1, n);
      break;
    case MoveKind::block_bwd:
      append(1, move.j - 1);
      append(move.i, move.i + move.len - 1);
      append(move.j, move.i - 1);
      append(move.i + move.len, n);
      break;
  }
  return out;
}

Cost naive_move_cost(const Instance& inst, const Sequence& seq,
                     const MoveSpec& move) {
  return total_cost(inst, materialize_naive(seq, move));
}

}  // namespace smtwt
