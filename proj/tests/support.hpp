#ifndef SMTWT_TESTS_SUPPORT_HPP
#define SMTWT_TESTS_SUPPORT_HPP

#include <vector>

#include "smtwt/instance.hpp"
#include "smtwt/move_eval.hpp"
#include "smtwt/rng.hpp"
#include "smtwt/sequence.hpp"

namespace smtwt::testutil {

struct InstanceParams {
  Time p_max = 20;
  Time d_max = 150;
  Cost w_max = 9;
  Time s_max = 12;
};

inline Instance random_instance(Rng& rng, int n,
                                InstanceParams params = {}) {
  Instance inst(n);
  for (int j = 1; j <= n; ++j) {
    inst.p[j] = rng.next_int(1, params.p_max);
    inst.d[j] = rng.next_int(0, params.d_max);
    inst.w[j] = rng.next_int(0, params.w_max);
  }
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i != j) inst.set_setup(i, j, rng.next_int(0, params.s_max));
    }
  }
  return inst;
}

inline Sequence random_sequence(Rng& rng, int n) {
  Sequence seq = Sequence::identity(n);
  for (int k = n; k >= 2; --k) {
    const int pick = static_cast<int>(rng.next_int(1, k));
    std::swap(seq.order[k], seq.order[pick]);
  }
  return seq;
}

inline MoveSpec random_move(Rng& rng, int n, int l_max) {
  for (;;) {
    const int kind = static_cast<int>(rng.next_int(0, 2));
    if (kind == 0) {
      if (n < 2) continue;
      const int i = static_cast<int>(rng.next_int(1, n - 1));
      const int j = static_cast<int>(rng.next_int(i + 1, n));
      return {MoveKind::swap, i, j, 1};
    }
    const int cap = std::min(l_max, n - 1);
    if (cap < 1) continue;
    const int l = static_cast<int>(rng.next_int(1, cap));
    if (kind == 1) {
      const int i = static_cast<int>(rng.next_int(1, n - l));
      const int j = static_cast<int>(rng.next_int(i + l, n));
      return {MoveKind::block_fwd, i, j, l};
    }
    const int i = static_cast<int>(rng.next_int(2, n - l + 1));
    const int j = static_cast<int>(rng.next_int(1, i - 1));
    return {MoveKind::block_bwd, i, j, l};
  }
}

// Every valid move with block length up to l_max, in scan order.
inline std::vector<MoveSpec> all_moves(int n, int l_max) {
  std::vector<MoveSpec> moves;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n; ++j) moves.push_back({MoveKind::swap, i, j, 1});
  for (int l = 1; l <= std::min(l_max, n - 1); ++l) {
    for (int i = 1; i <= n - l; ++i)
      for (int j = i + l; j <= n; ++j)
        moves.push_back({MoveKind::block_fwd, i, j, l});
    for (int i = 2; i <= n - l + 1; ++i)
      for (int j = 1; j <= i - 1; ++j)
        moves.push_back({MoveKind::block_bwd, i, j, l});
  }
  return moves;
}

}  // namespace smtwt::testutil

#endif
