#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "smtwt/metaheuristics.hpp"
#include "smtwt/oracle.hpp"
#include "support.hpp"

using namespace smtwt;

namespace {

std::vector<std::uint64_t> counter_fingerprint(const FilterSnapshot& snap) {
  std::vector<std::uint64_t> out;
  for (const auto& entry : snap.entries) {
    out.push_back(entry.counters.seen);
    out.push_back(entry.counters.admitted);
    out.push_back(entry.counters.rejected);
    out.push_back(entry.counters.evaluated);
    out.push_back(entry.counters.improving);
  }
  return out;
}

}  // namespace

TEST_CASE("randomized insertion construction") {
  Rng rng(501);
  SUBCASE("n = 1") {
    const Instance inst = testutil::random_instance(rng, 1);
    Rng c(1);
    CHECK(construct_randomized_insertion(inst, c).order ==
          std::vector<int>{0, 1});
  }
  SUBCASE("always a valid permutation, even with equal due dates") {
    Instance inst = testutil::random_instance(rng, 12);
    for (int j = 1; j <= 12; ++j) inst.d[j] = 30;
    for (int trial = 0; trial < 50; ++trial) {
      Rng c(trial);
      CHECK(construct_randomized_insertion(inst, c).is_valid_for(inst));
    }
  }
  SUBCASE("k = 1 reproduces the EDD order exactly") {
    Instance inst = testutil::random_instance(rng, 10);
    for (int j = 1; j <= 10; ++j) inst.d[j] = 100 - 7 * j;  // distinct
    Rng c(9);
    const Sequence seq = construct_randomized_insertion(inst, c, 1);
    std::vector<int> edd(10);
    std::iota(edd.begin(), edd.end(), 1);
    std::sort(edd.begin(), edd.end(),
              [&](int a, int b) { return inst.d[a] < inst.d[b]; });
    CHECK(std::equal(edd.begin(), edd.end(), seq.order.begin() + 1));
  }
}

TEST_CASE("greedy randomized construction") {
  Rng rng(503);
  SUBCASE("alpha = 0 with unique increments is deterministic greedy") {
    Instance inst(4);
    for (int j = 1; j <= 4; ++j) {
      inst.p[j] = 10 * j;  // distinct processing -> distinct increments
      inst.d[j] = 0;
      inst.w[j] = 1;
    }
    const Sequence expected = [&] {
      Rng c(1);
      return construct_grasp(inst, 0.0, c);
    }();
    for (int trial = 0; trial < 20; ++trial) {
      Rng c(trial);
      CHECK(construct_grasp(inst, 0.0, c).order == expected.order);
    }
    // plain greedy: cheapest increment first at every step
    CHECK(expected.order == std::vector<int>{0, 1, 2, 3, 4});
  }
  SUBCASE("alpha = 1 keeps the whole candidate list and stays valid") {
    const Instance inst = testutil::random_instance(rng, 9);
    std::set<std::vector<int>> seen;
    for (int trial = 0; trial < 40; ++trial) {
      Rng c(trial);
      const Sequence seq = construct_grasp(inst, 1.0, c);
      CHECK(seq.is_valid_for(inst));
      seen.insert(seq.order);
    }
    CHECK(seen.size() > 1);
  }
  SUBCASE("greedier construction is no worse on average") {
    // Equal weights with everything tardy make the increment a pure
    // completion-time growth, where the greedy bias has a clear signal. On
    // general instances the appended-job increment carries no urgency
    // information and the direction is instance-dependent.
    for (unsigned seed = 1; seed <= 4; ++seed) {
      Rng gen(seed);
      Instance inst(6);
      for (int j = 1; j <= 6; ++j) {
        inst.p[j] = gen.next_int(1, 20);
        inst.d[j] = 0;
        inst.w[j] = 1;
      }
      for (int i = 0; i <= 6; ++i)
        for (int j = 0; j <= 6; ++j)
          if (i != j) inst.set_setup(i, j, gen.next_int(0, 12));
      double mean_greedy = 0.0;
      double mean_random = 0.0;
      const int draws = 1000;
      Rng c1(11);
      Rng c2(12);
      for (int trial = 0; trial < draws; ++trial) {
        mean_greedy += static_cast<double>(
            total_cost(inst, construct_grasp(inst, 0.2, c1)));
        mean_random += static_cast<double>(
            total_cost(inst, construct_grasp(inst, 1.0, c2)));
      }
      CHECK(mean_greedy / draws <= mean_random / draws);
    }
  }
  SUBCASE("alpha outside [0, 1] is rejected") {
    const Instance inst = testutil::random_instance(rng, 3);
    Rng c(1);
    CHECK_THROWS_AS(construct_grasp(inst, 1.5, c), std::invalid_argument);
  }
}

TEST_CASE("double-bridge perturbation") {
  Rng rng(509);
  SUBCASE("output is a permutation and differs from the input for n >= 4") {
    for (int trial = 0; trial < 200; ++trial) {
      const int n = static_cast<int>(rng.next_int(4, 15));
      const Instance inst = testutil::random_instance(rng, n);
      const Sequence seq = testutil::random_sequence(rng, n);
      const Sequence out = perturb_double_bridge(seq, rng);
      CHECK(out.is_valid_for(inst));
      CHECK(out.order != seq.order);
      // the perturbed sequence evaluates cleanly
      CHECK(total_cost(inst, out) ==
            recompute_prefixes(inst, out).total());
    }
  }
  SUBCASE("small n falls back to an adjacent transposition") {
    const Instance inst = testutil::random_instance(rng, 3);
    for (int trial = 0; trial < 20; ++trial) {
      const Sequence seq = testutil::random_sequence(rng, 3);
      const Sequence out = perturb_double_bridge(seq, rng);
      CHECK(out.is_valid_for(inst));
      CHECK(out.order != seq.order);
      int mismatches = 0;
      for (int k = 1; k <= 3; ++k) {
        if (out.order[k] != seq.order[k]) ++mismatches;
      }
      CHECK(mismatches == 2);
    }
  }
}

TEST_CASE("ils_rvnd stops immediately when construction is already optimal") {
  Rng rng(521);
  Instance inst = testutil::random_instance(rng, 10);
  for (int j = 1; j <= 10; ++j) inst.d[j] = 1000000;
  SearchConfig cfg;
  cfg.seed = 3;
  Rng run_rng(cfg.seed);
  const RunReport report = ils_rvnd(inst, cfg, run_rng);
  CHECK(report.best_cost == 0);
  CHECK(report.restarts == 1);
  CHECK(report.iterations == 0);
}

TEST_CASE("inert filter reproduces the plain trajectory exactly") {
  Rng rng(523);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = static_cast<int>(rng.next_int(6, 14));
    const Instance inst = testutil::random_instance(rng, n);

    SearchConfig plain;
    plain.fast = false;
    plain.restarts = 3;
    plain.seed = 1000 + trial;

    SearchConfig inert = plain;
    inert.fast = true;
    inert.record_improvements = false;  // lists stay empty -> thresholds M
    inert.learning_divisor = 1;         // same budget in restart 1

    Rng r1(plain.seed);
    Rng r2(inert.seed);
    const RunReport a = ils_rvnd(inst, plain, r1);
    const RunReport b = ils_rvnd(inst, inert, r2);
    CHECK(a.best_cost == b.best_cost);
    CHECK(a.best_sequence.order == b.best_sequence.order);
    CHECK(a.iterations == b.iterations);
    CHECK(counter_fingerprint(a.filter) == counter_fingerprint(b.filter));
    for (const auto& entry : b.filter.entries) {
      CHECK_FALSE(entry.threshold.has_value());
      CHECK(entry.counters.rejected == 0);
    }
  }
}

TEST_CASE("ils_rvnd reaches desk-scale optima") {
  Rng rng(541);
  int hits = 0;
  const int instances = 20;
  for (int trial = 0; trial < instances; ++trial) {
    const Instance inst = testutil::random_instance(rng, 8);
    const Cost optimum = exact_bruteforce(inst).opt_cost;
    SearchConfig cfg;
    cfg.restarts = 5;
    cfg.seed = trial + 1;
    Rng run_rng(cfg.seed);
    const RunReport report = ils_rvnd(inst, cfg, run_rng);
    CHECK(report.best_cost >= optimum);
    if (report.best_cost == optimum) ++hits;
  }
  CHECK(hits >= instances - 1);
}

TEST_CASE("ils_rvnd is deterministic and monotone under the seed") {
  Rng rng(547);
  const Instance inst = testutil::random_instance(rng, 12);
  SearchConfig cfg;
  cfg.restarts = 4;
  cfg.seed = 99;
  Rng r1(cfg.seed);
  Rng r2(cfg.seed);
  const RunReport a = ils_rvnd(inst, cfg, r1);
  const RunReport b = ils_rvnd(inst, cfg, r2);
  CHECK(a.best_cost == b.best_cost);
  CHECK(a.best_sequence.order == b.best_sequence.order);
  CHECK(a.iterations == b.iterations);
  CHECK(counter_fingerprint(a.filter) == counter_fingerprint(b.filter));
  CHECK(a.best_cost == total_cost(inst, a.best_sequence));
}

TEST_CASE("target mode stops at the first hit") {
  Rng rng(557);
  const Instance inst = testutil::random_instance(rng, 10);
  const Cost optimum = exact_bruteforce(inst).opt_cost;

  SearchConfig cfg;
  cfg.seed = 7;
  cfg.target = optimum;
  cfg.time_limit_s = 30.0;  // safety net only
  Rng run_rng(cfg.seed);
  const RunReport report = ils_rvnd(inst, cfg, run_rng);
  CHECK(report.best_cost <= optimum);
  CHECK(report.target_hit);
  CHECK(report.elapsed_seconds < 30.0);
}

TEST_CASE("grasp basics") {
  Rng rng(563);
  const Instance inst = testutil::random_instance(rng, 10);
  SUBCASE("a single restart is one construction plus one descent") {
    SearchConfig cfg = SearchConfig::grasp_defaults();
    cfg.restarts = 1;
    cfg.fast = false;
    cfg.seed = 5;
    Rng run_rng(cfg.seed);
    const RunReport report = grasp(inst, cfg, run_rng);
    CHECK(report.iterations == 1);
    CHECK(report.best_cost == total_cost(inst, report.best_sequence));
  }
  SUBCASE("deterministic under the seed") {
    SearchConfig cfg = SearchConfig::grasp_defaults();
    cfg.restarts = 40;
    cfg.seed = 17;
    Rng r1(cfg.seed);
    Rng r2(cfg.seed);
    CHECK(grasp(inst, cfg, r1).best_cost == grasp(inst, cfg, r2).best_cost);
  }
  SUBCASE("the filtered variant evaluates strictly fewer candidates") {
    SearchConfig slow = SearchConfig::grasp_defaults();
    slow.restarts = 60;
    slow.fast = false;
    slow.seed = 23;
    SearchConfig fast = slow;
    fast.fast = true;
    Rng r1(slow.seed);
    Rng r2(fast.seed);
    const RunReport a = grasp(inst, slow, r1);
    const RunReport b = grasp(inst, fast, r2);
    std::uint64_t eval_slow = 0;
    std::uint64_t eval_fast = 0;
    std::uint64_t rejected_fast = 0;
    for (const auto& entry : a.filter.entries)
      eval_slow += entry.counters.evaluated;
    for (const auto& entry : b.filter.entries) {
      eval_fast += entry.counters.evaluated;
      rejected_fast += entry.counters.rejected;
    }
    CHECK(eval_fast < eval_slow);
    CHECK(rejected_fast > 0);
  }
}

TEST_CASE("vns basics") {
  Rng rng(569);
  const Instance inst = testutil::random_instance(rng, 10);
  SUBCASE("one iteration is construction plus a single descent") {
    SearchConfig cfg = SearchConfig::vns_defaults();
    cfg.iterations = 1;
    cfg.fast = false;
    cfg.seed = 2;
    Rng run_rng(cfg.seed);
    const RunReport report = vns(inst, cfg, run_rng);
    CHECK(report.iterations == 1);
  }
  SUBCASE("deterministic under the seed") {
    SearchConfig cfg = SearchConfig::vns_defaults();
    cfg.iterations = 120;
    cfg.seed = 31;
    Rng r1(cfg.seed);
    Rng r2(cfg.seed);
    const RunReport a = vns(inst, cfg, r1);
    const RunReport b = vns(inst, cfg, r2);
    CHECK(a.best_cost == b.best_cost);
    CHECK(a.best_sequence.order == b.best_sequence.order);
  }
  SUBCASE("finds desk-scale optima") {
    Rng gen(571);
    int hits = 0;
    for (int trial = 0; trial < 10; ++trial) {
      const Instance small = testutil::random_instance(gen, 8);
      const Cost optimum = exact_bruteforce(small).opt_cost;
      SearchConfig cfg = SearchConfig::vns_defaults();
      cfg.iterations = 150;
      cfg.seed = trial + 1;
      Rng run_rng(cfg.seed);
      if (vns(small, cfg, run_rng).best_cost == optimum) ++hits;
    }
    CHECK(hits >= 9);
  }
}

TEST_CASE("config validation") {
  SearchConfig cfg;
  cfg.theta = 1.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.theta = 0.9;
  cfg.restarts = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.restarts = 1;
  cfg.use_swap = false;
  cfg.max_block_len = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("neighborhood resolution clamps L and fixes the order") {
  SearchConfig cfg;
  cfg.max_block_len = 13;
  const auto ids = resolve_neighborhoods(cfg, 10);
  REQUIRE(ids.size() == 10);  // swap + l = 1..9
  CHECK(ids[0].is_swap());
  for (int l = 1; l <= 9; ++l) CHECK(ids[l].block_len == l);
}
