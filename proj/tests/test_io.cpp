#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "smtwt/generator.hpp"
#include "smtwt/instance_io.hpp"
#include "smtwt/gap_stats.hpp"
#include "smtwt/reference_optima.hpp"
#include "support.hpp"

using namespace smtwt;

TEST_CASE("canonical parsing") {
  SUBCASE("minimal single-job file") {
    const Instance inst = parse_canonical("1\n3\n5\n10\n0 2\n0 0\n");
    CHECK(inst.n == 1);
    CHECK(inst.p[1] == 3);
    CHECK(inst.w[1] == 5);
    CHECK(inst.d[1] == 10);
    CHECK(inst.setup(0, 1) == 2);
    CHECK(inst.setup_data().size() == 4);
  }
  SUBCASE("a short setup matrix is a shape error") {
    // n = 2 needs 3x3 setup values; one row missing
    const std::string text = "2\n1 2\n1 1\n5 5\n0 1 2\n3 0 4\n";
    CHECK_THROWS_AS(parse_canonical(text), ParseError);
  }
  SUBCASE("non-integer tokens are positioned errors") {
    try {
      parse_canonical("2\n1 x\n1 1\n5 5\n0 0 0\n0 0 0\n0 0 0\n");
      FAIL("expected ParseError");
    } catch (const ParseError& err) {
      CHECK(err.line == 2);
      CHECK(err.col == 3);
    }
  }
  SUBCASE("trailing data is rejected") {
    CHECK_THROWS_AS(parse_canonical("1\n3\n5\n10\n0 2\n0 0\n99\n"), ParseError);
  }
  SUBCASE("bad job counts are rejected") {
    CHECK_THROWS_AS(parse_canonical("0\n"), ParseError);
    CHECK_THROWS_AS(parse_canonical("-3\n"), ParseError);
  }
}

TEST_CASE("canonical round-trip on generated instances") {
  Rng rng(601);
  for (int trial = 0; trial < 25; ++trial) {
    GeneratorConfig gc;
    gc.n = static_cast<int>(rng.next_int(1, 30));
    gc.tau = rng.next_fraction();
    gc.r = rng.next_fraction();
    gc.eta = rng.next_fraction();
    gc.seed = rng.next_u64();
    const Instance inst = generate_instance(gc);
    const Instance back = parse_canonical(write_canonical(inst));
    CHECK(back.n == inst.n);
    CHECK(back.p == inst.p);
    CHECK(back.w == inst.w);
    CHECK(back.d == inst.d);
    CHECK(back.setup_data() == inst.setup_data());
    // and the rendering itself is stable
    CHECK(write_canonical(back) == write_canonical(inst));
  }
}

namespace {

const char* kCicirelloFixture = R"(Problem Instance: wt_sds_demo
Problem Size: 3

Begin Generator Parameters
Tau: 0.3
R: 0.25
Eta: 0.25
End Generator Parameters

Begin Problem Specification
Process Times:
7 4 9
Weights:
2 0 5
Duedates:
11 3 0
Setup Times:
-1 0 4
-1 1 6
-1 2 1
0 1 2
0 2 3
1 0 5
1 2 9
2 0 7
2 1 8
End Problem Specification
)";

}  // namespace

TEST_CASE("cicirello dialect") {
  SUBCASE("labeled sections map into the instance") {
    const Instance inst = parse_benchmark(kCicirelloFixture,
                                          Dialect::cicirello);
    CHECK(inst.n == 3);
    CHECK(inst.p == std::vector<Time>{0, 7, 4, 9});
    CHECK(inst.w == std::vector<Cost>{0, 2, 0, 5});
    CHECK(inst.d == std::vector<Time>{0, 11, 3, 0});
    // initial setups (from = -1)
    CHECK(inst.setup(0, 1) == 4);
    CHECK(inst.setup(0, 2) == 6);
    CHECK(inst.setup(0, 3) == 1);
    // pairwise setups (0-based in the file)
    CHECK(inst.setup(1, 2) == 2);
    CHECK(inst.setup(1, 3) == 3);
    CHECK(inst.setup(2, 1) == 5);
    CHECK(inst.setup(2, 3) == 9);
    CHECK(inst.setup(3, 1) == 7);
    CHECK(inst.setup(3, 2) == 8);
    CHECK(validate_instance(inst).ok);
  }
  SUBCASE("the adapter output re-serializes canonically and parses back") {
    const Instance inst = parse_benchmark(kCicirelloFixture,
                                          Dialect::cicirello);
    const Instance back = parse_canonical(write_canonical(inst));
    CHECK(back.setup_data() == inst.setup_data());
    CHECK(back.w == inst.w);
  }
  SUBCASE("missing sections are errors") {
    CHECK_THROWS_AS(parse_benchmark("Process Times:\n1 2 3\n",
                                    Dialect::cicirello),
                    ParseError);
    CHECK_THROWS_AS(parse_benchmark("Problem Size: 3\nProcess Times:\n1 2\n"
                                    "Weights:\n1 1 1\nDuedates:\n1 1 1\n"
                                    "Setup Times:\n-1 0 1\n",
                                    Dialect::cicirello),
                    ParseError);
  }
  SUBCASE("setup triples must stay in range") {
    CHECK_THROWS_AS(parse_benchmark("Problem Size: 2\nProcess Times:\n1 2\n"
                                    "Weights:\n1 1\nDuedates:\n1 1\n"
                                    "Setup Times:\n-1 5 1\n",
                                    Dialect::cicirello),
                    ParseError);
  }
}

TEST_CASE("unweighted dialect") {
  SUBCASE("full (n+1)x(n+1) matrix") {
    const Instance inst = parse_benchmark(
        "2\n6 7\n9 9\n0 1 2\n0 0 3\n0 4 0\n", Dialect::unweighted);
    CHECK(inst.n == 2);
    CHECK(inst.w == std::vector<Cost>{0, 1, 1});
    CHECK(inst.setup(0, 1) == 1);
    CHECK(inst.setup(0, 2) == 2);
    CHECK(inst.setup(1, 2) == 3);
    CHECK(inst.setup(2, 1) == 4);
  }
  SUBCASE("initial row plus n x n matrix") {
    const Instance inst =
        parse_benchmark("2\n6 7\n9 9\n1 2\n0 3\n4 0\n", Dialect::unweighted);
    CHECK(inst.setup(0, 1) == 1);
    CHECK(inst.setup(0, 2) == 2);
    CHECK(inst.setup(1, 2) == 3);
    CHECK(inst.setup(2, 1) == 4);
  }
  SUBCASE("bare n x n matrix leaves zero initial setups") {
    const Instance inst =
        parse_benchmark("2\n6 7\n9 9\n0 3\n4 0\n", Dialect::unweighted);
    CHECK(inst.setup(0, 1) == 0);
    CHECK(inst.setup(0, 2) == 0);
    CHECK(inst.setup(1, 2) == 3);
  }
  SUBCASE("anything else is a shape error") {
    CHECK_THROWS_AS(parse_benchmark("2\n6 7\n9 9\n1 2 3 4 5\n",
                                    Dialect::unweighted),
                    ParseError);
  }
}

TEST_CASE("generator") {
  SUBCASE("eta = 0 gives an all-zero setup matrix") {
    GeneratorConfig gc;
    gc.n = 12;
    gc.eta = 0.0;
    gc.seed = 4;
    const Instance inst = generate_instance(gc);
    for (const Time s : inst.setup_data()) CHECK(s == 0);
  }
  SUBCASE("tighter tau pushes every due date below the loose window") {
    GeneratorConfig tight;
    tight.n = 40;
    tight.tau = 0.9;
    tight.r = 0.25;
    tight.seed = 11;
    GeneratorConfig loose = tight;
    loose.tau = 0.3;
    const Instance a = generate_instance(tight);
    const Instance b = generate_instance(loose);
    // identical seeds draw identical p and setups
    CHECK(a.p == b.p);
    CHECK(a.setup_data() == b.setup_data());
    const Time tight_max = *std::max_element(a.d.begin() + 1, a.d.end());
    const Time loose_min = *std::min_element(b.d.begin() + 1, b.d.end());
    CHECK(tight_max < loose_min);
  }
  SUBCASE("every generated instance validates") {
    Rng rng(607);
    for (int trial = 0; trial < 300; ++trial) {
      GeneratorConfig gc;
      gc.n = static_cast<int>(rng.next_int(1, 50));
      gc.tau = rng.next_fraction();
      gc.r = rng.next_fraction();
      gc.eta = rng.next_fraction();
      gc.seed = rng.next_u64();
      CHECK(validate_instance(generate_instance(gc)).ok);
    }
  }
  SUBCASE("determinism under the seed") {
    GeneratorConfig gc;
    gc.n = 20;
    gc.seed = 77;
    CHECK(write_canonical(generate_instance(gc)) ==
          write_canonical(generate_instance(gc)));
  }
  SUBCASE("bad fractions are rejected") {
    GeneratorConfig gc;
    gc.tau = 1.5;
    CHECK_THROWS_AS(generate_instance(gc), std::invalid_argument);
  }
}

TEST_CASE("gap statistics") {
  SUBCASE("all runs at the reference give zero gaps") {
    const std::vector<InstanceRuns> runs = {
        {"a", {100, 100, 100}, {0.5, 0.5, 0.5}},
        {"b", {40, 40}, {0.1, 0.3}},
    };
    const GapStats stats = compute_gaps(runs, {{"a", 100}, {"b", 40}});
    CHECK(stats.arith_mean_best_gap == doctest::Approx(0.0));
    CHECK(stats.geom_mean_avg_gap == doctest::Approx(0.0));
    CHECK(stats.gap_instances == 2);
  }
  SUBCASE("hand-computed fixture") {
    // best gaps: a -> 2%, b -> 8% ; arithmetic mean 5%
    // avg gaps:  a -> 2%, b -> 8% ; geometric mean sqrt(16) = 4%
    const std::vector<InstanceRuns> runs = {
        {"a", {102, 102}, {1.0, 1.0}},
        {"b", {108, 108}, {3.0, 3.0}},
    };
    const GapStats stats = compute_gaps(runs, {{"a", 100}, {"b", 100}});
    CHECK(stats.arith_mean_best_gap == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(stats.geom_mean_avg_gap == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(stats.geom_mean_worst_gap == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(stats.mean_avg_seconds == doctest::Approx(2.0));
  }
  SUBCASE("zero gaps are disregarded by the geometric mean") {
    // avg gaps 0%, 2%, 8%: the zero is dropped, geometric mean stays 4
    const std::vector<InstanceRuns> runs = {
        {"a", {100}, {1.0}},
        {"b", {102}, {1.0}},
        {"c", {108}, {1.0}},
    };
    const GapStats stats =
        compute_gaps(runs, {{"a", 100}, {"b", 100}, {"c", 100}});
    CHECK(stats.geom_mean_avg_gap == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(stats.zero_avg_gaps_dropped == 1);
    // the zero still counts into the arithmetic mean of best gaps
    CHECK(stats.arith_mean_best_gap ==
          doctest::Approx((0.0 + 2.0 + 8.0) / 3.0).epsilon(1e-9));
  }
  SUBCASE("zero or missing references are excluded and flagged") {
    const std::vector<InstanceRuns> runs = {
        {"zero_opt", {5}, {1.0}},
        {"unknown", {7}, {1.0}},
        {"good", {104}, {1.0}},
    };
    const GapStats stats = compute_gaps(runs, {{"zero_opt", 0}, {"good", 100}});
    CHECK(stats.excluded_no_reference == 2);
    CHECK(stats.gap_instances == 1);
    CHECK_FALSE(stats.per_instance[0].best_gap.has_value());
    CHECK_FALSE(stats.per_instance[1].best_gap.has_value());
    CHECK(stats.per_instance[2].best_gap == doctest::Approx(4.0));
  }
  SUBCASE("geometric mean helper") {
    int dropped = -1;
    CHECK(geometric_mean({2.0, 8.0}, &dropped) ==
          doctest::Approx(4.0).epsilon(1e-9));
    CHECK(dropped == 0);
    CHECK(geometric_mean({0.0, 2.0, 8.0}, &dropped) ==
          doctest::Approx(4.0).epsilon(1e-9));
    CHECK(dropped == 1);
    CHECK(geometric_mean({}, &dropped) == 0.0);
  }
}

TEST_CASE("reference optima table") {
  CHECK(lookup_reference("401") == Cost{90});
  CHECK(lookup_reference("402") == Cost{0});
  CHECK(lookup_reference("403") == Cost{3418});
  CHECK(lookup_reference("408") == Cost{5660});
  CHECK(lookup_reference("858") == Cost{74739});
  CHECK(lookup_reference("Prob404") == Cost{1067});
  CHECK_FALSE(lookup_reference("nonexistent").has_value());
  CHECK(reference_optima().size() == 64);
}
