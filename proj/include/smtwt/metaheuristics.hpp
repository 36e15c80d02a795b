#ifndef SMTWT_METAHEURISTICS_HPP
#define SMTWT_METAHEURISTICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "smtwt/filter.hpp"
#include "smtwt/local_search.hpp"
#include "smtwt/rng.hpp"

namespace smtwt {

// Shared configuration of the three drivers. Defaults are the tuned weighted
// configuration: theta 0.90, L = {1..13} plus swap, I_R = 20 restarts and
// I_ILS = 4n (iterations = 0 means "use 4n"). For GRASP `restarts` is the
// number of multistart rounds (tuned value 5000) and for VNS `iterations` is
// the total iteration count (tuned value 1000); use grasp_defaults() /
// vns_defaults() to get those.
struct SearchConfig {
  double theta = 0.90;
  int max_block_len = 13;  // L = {1..max_block_len}, clamped to n-1
  bool use_swap = true;
  int restarts = 20;
  int iterations = 0;
  std::uint64_t seed = 1;
  bool fast = true;  // setup-variation filter on/off

  std::optional<Cost> target;          // stop once best <= target
  std::optional<double> time_limit_s;  // stop once elapsed >= limit

  // Learning-phase extent: ILS learns during the first restart with budget
  // I_ILS / learning_divisor; GRASP and VNS learn during the first
  // learning_fraction of their restarts / iterations.
  int learning_divisor = 2;
  double learning_fraction = 0.05;

  // Randomized-insertion construction picks among the construction_k
  // unscheduled jobs with earliest due dates; 1 gives plain EDD.
  int construction_k = 3;

  // Diagnostic runs evaluate every candidate and tag would-be rejections so
  // lost improving moves can be counted. Never use for timing.
  bool diagnostic = false;

  // Test hook: keep the delta lists empty so every threshold stays at M.
  bool record_improvements = true;

  static SearchConfig grasp_defaults();
  static SearchConfig vns_defaults();

  void validate() const;  // throws std::invalid_argument on bad fields
};

// Neighborhood set for an instance: swap first, then 1..min(lmax, n-1)-block,
// in that fixed order so seeded draws reproduce.
std::vector<NeighborhoodId> resolve_neighborhoods(const SearchConfig& cfg,
                                                  int n);

struct FilterSnapshot {
  struct Entry {
    NeighborhoodId id;
    std::optional<Time> threshold;
    NeighborhoodCounters counters;
  };
  std::vector<Entry> entries;
};

struct RunReport {
  Cost best_cost = 0;
  Sequence best_sequence;
  double elapsed_seconds = 0.0;
  double time_to_best_seconds = 0.0;
  std::uint64_t iterations = 0;  // local-search descents executed
  std::uint64_t restarts = 0;
  bool target_hit = false;
  FilterSnapshot filter;
};

// Randomized insertion: repeatedly appends one job drawn uniformly among the
// k unscheduled jobs with the earliest due dates.
Sequence construct_randomized_insertion(const Instance& inst, Rng& rng,
                                        int k = 3);

// Greedy randomized construction: appends a job drawn uniformly from the
// restricted candidate list {c : incr(c) <= cmin + alpha * (cmax - cmin)},
// where incr(c) is the weighted-tardiness increase of appending c.
Sequence construct_grasp(const Instance& inst, double alpha, Rng& rng);

// Double-bridge: splits positions 1..n into A|B|C|D with random cut points
// and reassembles A C B D. For n < 4 falls back to a random adjacent
// transposition.
Sequence perturb_double_bridge(const Sequence& seq, Rng& rng);

RunReport ils_rvnd(const Instance& inst, const SearchConfig& cfg, Rng& rng);
RunReport grasp(const Instance& inst, const SearchConfig& cfg, Rng& rng);
RunReport vns(const Instance& inst, const SearchConfig& cfg, Rng& rng);

// Seeds the generator from cfg.seed.
RunReport run_algorithm(const std::string& algo, const Instance& inst,
                        const SearchConfig& cfg);

}  // namespace smtwt

#endif
