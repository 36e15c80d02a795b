#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "smtwt/oracle.hpp"
#include "smtwt/sequence.hpp"
#include "support.hpp"

using namespace smtwt;

namespace {

Instance single_job(Time p, Time d, Cost w, Time initial_setup) {
  Instance inst(1);
  inst.p[1] = p;
  inst.d[1] = d;
  inst.w[1] = w;
  inst.set_setup(0, 1, initial_setup);
  return inst;
}

}  // namespace

TEST_CASE("total_cost on a single job") {
  const Sequence seq = Sequence::identity(1);

  // setup 2 + p 3 completes at 5
  CHECK(total_cost(single_job(3, 10, 5, 2), seq) == 0);
  CHECK(total_cost(single_job(3, 1, 5, 2), seq) == (5 - 1) * 5);
}

TEST_CASE("no job can be tardy when due dates dominate the horizon") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(rng.next_int(1, 10));
    Instance inst = testutil::random_instance(rng, n);
    Time horizon = 0;
    for (int j = 1; j <= n; ++j) horizon += inst.p[j];
    for (int i = 0; i <= n; ++i) {
      Time row_max = 0;
      for (int j = 1; j <= n; ++j) {
        if (i != j) row_max = std::max(row_max, inst.setup(i, j));
      }
      horizon += row_max;
    }
    for (int j = 1; j <= n; ++j) inst.d[j] = horizon;
    const Sequence seq = testutil::random_sequence(rng, n);
    CHECK(total_cost(inst, seq) == 0);
  }
}

TEST_CASE("recompute_prefixes satisfies its invariants") {
  SUBCASE("single tardy job") {
    const Instance inst = single_job(3, 1, 5, 2);
    const EvalState state = recompute_prefixes(inst, Sequence::identity(1));
    CHECK(state.completion == std::vector<Time>{0, 5});
    CHECK(state.cum_cost == std::vector<Cost>{0, 20});
  }
  SUBCASE("tardiness-free instance has an all-zero g") {
    Rng rng(11);
    Instance inst = testutil::random_instance(rng, 6);
    for (int j = 1; j <= 6; ++j) inst.d[j] = 100000;
    const EvalState state =
        recompute_prefixes(inst, testutil::random_sequence(rng, 6));
    for (const Cost g : state.cum_cost) CHECK(g == 0);
  }
  SUBCASE("g[n] equals total_cost on random instances") {
    Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = static_cast<int>(rng.next_int(1, 8));
      const Instance inst = testutil::random_instance(rng, n);
      const Sequence seq = testutil::random_sequence(rng, n);
      const EvalState state = recompute_prefixes(inst, seq);
      CHECK(state.total() == total_cost(inst, seq));
      CHECK(state.completion[0] == 0);
      CHECK(state.cum_cost[0] == 0);
      // step recurrence
      for (int k = 1; k <= n; ++k) {
        const int job = seq.order[k];
        CHECK(state.completion[k] ==
              state.completion[k - 1] + inst.setup(seq.order[k - 1], job) +
                  inst.p[job]);
      }
    }
  }
}

TEST_CASE("recompute_prefixes_from repairs a suffix") {
  Rng rng(31);
  const Instance inst = testutil::random_instance(rng, 10);
  Sequence seq = testutil::random_sequence(rng, 10);
  EvalState state = recompute_prefixes(inst, seq);
  std::swap(seq.order[4], seq.order[9]);
  recompute_prefixes_from(inst, seq, state, 4);
  CHECK(eval_state_consistent(inst, seq, state));
}

TEST_CASE("all-zero weights cost nothing under any permutation") {
  Rng rng(43);
  Instance inst = testutil::random_instance(rng, 7);
  for (int j = 1; j <= 7; ++j) inst.w[j] = 0;
  for (int trial = 0; trial < 30; ++trial) {
    CHECK(total_cost(inst, testutil::random_sequence(rng, 7)) == 0);
  }
}

TEST_CASE("validate_instance") {
  Rng rng(3);
  SUBCASE("well-formed instance passes") {
    const Instance inst = testutil::random_instance(rng, 3);
    CHECK(validate_instance(inst).ok);
  }
  SUBCASE("missing setup row is a dimension error naming the matrix") {
    Instance inst = testutil::random_instance(rng, 3);
    inst.setup_data().resize(3 * 4);
    const ValidationReport report = validate_instance(inst);
    CHECK_FALSE(report.ok);
    REQUIRE(report.errors.size() == 1);
    CHECK(report.errors[0].find("setup matrix") != std::string::npos);
  }
  SUBCASE("negative weight is reported with field and index") {
    Instance inst = testutil::random_instance(rng, 3);
    inst.w[2] = -1;
    const ValidationReport report = validate_instance(inst);
    CHECK_FALSE(report.ok);
    REQUIRE(report.errors.size() == 1);
    CHECK(report.errors[0].find("w[2]") != std::string::npos);
  }
  SUBCASE("every violation is reported, not just the first") {
    Instance inst = testutil::random_instance(rng, 3);
    inst.w[1] = -5;
    inst.d[3] = -2;
    inst.set_setup(0, 2, -7);
    CHECK(validate_instance(inst).errors.size() == 3);
  }
}

TEST_CASE("sequence validity") {
  Rng rng(5);
  const Instance inst = testutil::random_instance(rng, 5);
  Sequence seq = testutil::random_sequence(rng, 5);
  CHECK(seq.is_valid_for(inst));
  seq.order[2] = seq.order[3];
  CHECK_FALSE(seq.is_valid_for(inst));
}
