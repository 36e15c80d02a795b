#ifndef SMTWT_ORACLE_HPP
#define SMTWT_ORACLE_HPP

#include <cstdint>

#include "smtwt/move_eval.hpp"
#include "smtwt/sequence.hpp"

namespace smtwt {

struct OracleResult {
  Cost opt_cost = 0;
  Sequence opt_sequence;
  std::uint64_t nodes_explored = 0;
};

// Exhaustive exact solver for desk-scale verification. Enumerates
// permutations in lexicographic job-id order with prefix-cost pruning, so the
// returned optimum is the lexicographically smallest one and nodes_explored
// is reproducible. Refuses n > 12.
OracleResult exact_bruteforce(const Instance& inst, bool prune = true);

// Full-recompute cost of the sequence obtained by applying move to seq.
// This is the ground truth the incremental evaluators are checked against;
// it builds the candidate permutation directly from the move definition and
// never touches the block-decomposition code.
Cost naive_move_cost(const Instance& inst, const Sequence& seq,
                     const MoveSpec& move);

// The candidate permutation itself, built the same way.
Sequence materialize_naive(const Sequence& seq, const MoveSpec& move);

}  // namespace smtwt

#endif
