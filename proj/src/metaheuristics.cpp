#include "smtwt/metaheuristics.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <chrono>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace smtwt {

SearchConfig SearchConfig::grasp_defaults() {
  SearchConfig cfg;
  cfg.restarts = 5000;
  return cfg;
}

SearchConfig SearchConfig::vns_defaults() {
  SearchConfig cfg;
  cfg.restarts = 1;
  cfg.iterations = 1000;
  return cfg;
}

void SearchConfig::validate() const {
  if (theta < 0.0 || theta > 1.0)
    throw std::invalid_argument("config: theta must be in [0, 1]");
  if (restarts < 1)
    throw std::invalid_argument("config: restarts must be >= 1");
  if (iterations < 0)
    throw std::invalid_argument("config: iterations must be >= 0");
  if (!use_swap && max_block_len < 1)
    throw std::invalid_argument("config: need swap or at least one l-block");
  if (learning_divisor < 1)
    throw std::invalid_argument("config: learning_divisor must be >= 1");
  if (learning_fraction < 0.0 || learning_fraction > 1.0)
    throw std::invalid_argument("config: learning_fraction must be in [0, 1]");
  if (construction_k < 1)
    throw std::invalid_argument("config: construction_k must be >= 1");
  if (time_limit_s && *time_limit_s <= 0.0)
    throw std::invalid_argument("config: time limit must be positive");
}

std::vector<NeighborhoodId> resolve_neighborhoods(const SearchConfig& cfg,
                                                  int n) {
  std::vector<NeighborhoodId> ids;
  if (cfg.use_swap) ids.push_back({0});
  const int lmax = std::min(cfg.max_block_len, n - 1);
  for (int l = 1; l <= lmax; ++l) ids.push_back({l});
  if (ids.empty()) ids.push_back({0});  // n == 1: swap scans nothing
  return ids;
}

Sequence construct_randomized_insertion(const Instance& inst, Rng& rng,
                                        int k) {
  std::vector<int> pool(inst.n);
  std::iota(pool.begin(), pool.end(), 1);
  std::sort(pool.begin(), pool.end(), [&](int a, int b) {
    return inst.d[a] != inst.d[b] ? inst.d[a] < inst.d[b] : a < b;
  });
  Sequence seq;
  seq.order.reserve(inst.n + 1);
  seq.order.push_back(0);
  while (!pool.empty()) {
    const int window = std::min<int>(k, static_cast<int>(pool.size()));
    const int pick = rng.next_index(window);
    seq.order.push_back(pool[pick]);
    pool.erase(pool.begin() + pick);
  }
  return seq;
}

Sequence construct_grasp(const Instance& inst, double alpha, Rng& rng) {
  if (alpha < 0.0 || alpha > 1.0) {
    throw std::invalid_argument("construct_grasp: alpha must be in [0, 1]");
  }
  std::vector<int> remaining(inst.n);
  std::iota(remaining.begin(), remaining.end(), 1);
  Sequence seq;
  seq.order.reserve(inst.n + 1);
  seq.order.push_back(0);
  Time completion = 0;
  std::vector<Cost> incr(inst.n);
  std::vector<int> rcl;
  while (!remaining.empty()) {
    const int last = seq.order.back();
    Cost cmin = std::numeric_limits<Cost>::max();
    Cost cmax = std::numeric_limits<Cost>::min();
    for (std::size_t idx = 0; idx < remaining.size(); ++idx) {
      const int job = remaining[idx];
      const Time done = completion + inst.setup(last, job) + inst.p[job];
      const Time late = done - inst.d[job];
      incr[idx] = late > 0 ? inst.w[job] * late : 0;
      cmin = std::min(cmin, incr[idx]);
      cmax = std::max(cmax, incr[idx]);
    }
    const double limit =
        static_cast<double>(cmin) +
        alpha * static_cast<double>(cmax - cmin);
    rcl.clear();
    for (std::size_t idx = 0; idx < remaining.size(); ++idx) {
      if (static_cast<double>(incr[idx]) <= limit) {
        rcl.push_back(static_cast<int>(idx));
      }
    }
    const int choice = rcl[rng.next_index(static_cast<int>(rcl.size()))];
    const int job = remaining[choice];
    completion += inst.setup(last, job) + inst.p[job];
    seq.order.push_back(job);
    remaining.erase(remaining.begin() + choice);
  }
  return seq;
}

Sequence perturb_double_bridge(const Sequence& seq, Rng& rng) {
  const int n = seq.size();
  if (n < 2) return seq;
  if (n < 4) {
    Sequence out = seq;
    const int k = static_cast<int>(rng.next_int(1, n - 1));
    std::swap(out.order[k], out.order[k + 1]);
    return out;
  }
  const int c1 = static_cast<int>(rng.next_int(0, n - 3));
  const int c2 = static_cast<int>(rng.next_int(c1 + 1, n - 2));
  const int c3 = static_cast<int>(rng.next_int(c2 + 1, n - 1));
  Sequence out;
  out.order.reserve(n + 1);
  out.order.push_back(0);
  auto append = [&](int from, int to) {
    for (int pos = from; pos <= to; ++pos) out.order.push_back(seq.order[pos]);
  };
  append(1, c1);            // A
  append(c2 + 1, c3);       // C
  append(c1 + 1, c2);       // B
  append(c3 + 1, n);        // D
  return out;
}

namespace {

constexpr std::array<double, 6> kGraspAlphas = {0.0, 0.1, 0.2,
                                                0.3, 0.4, 0.5};

// Global best, wall clock and the three global stop conditions shared by the
// drivers: zero cost, target reached, time limit.
class RunTracker {
 public:
  RunTracker(const SearchConfig& cfg)
      : cfg_(cfg), start_(std::chrono::steady_clock::now()) {}

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

  // Returns true when the run should stop.
  bool offer(const Sequence& seq, Cost cost) {
    if (cost < best_cost_) {
      best_cost_ = cost;
      best_seq_ = seq;
      time_to_best_ = elapsed();
    }
    return should_stop();
  }

  bool should_stop() {
    if (stopped_) return true;
    if (cfg_.target && best_cost_ <= *cfg_.target) {
      target_hit_ = true;
      return stopped_ = true;
    }
    if (best_cost_ == 0) return stopped_ = true;
    if (cfg_.time_limit_s && elapsed() >= *cfg_.time_limit_s) {
      return stopped_ = true;
    }
    return false;
  }

  void fill(RunReport& report) const {
    report.best_cost = best_cost_;
    report.best_sequence = best_seq_;
    report.elapsed_seconds = elapsed();
    report.time_to_best_seconds = time_to_best_;
    report.target_hit = target_hit_;
  }

 private:
  const SearchConfig& cfg_;
  std::chrono::steady_clock::time_point start_;
  Cost best_cost_ = std::numeric_limits<Cost>::max();
  Sequence best_seq_;
  double time_to_best_ = 0.0;
  bool target_hit_ = false;
  bool stopped_ = false;
};

FilterState make_filter(const std::vector<NeighborhoodId>& neighborhoods,
                        const SearchConfig& cfg) {
  FilterState fs(neighborhoods,
                 cfg.fast ? FilterMode::learning : FilterMode::off);
  fs.set_diagnostic(cfg.diagnostic);
  fs.set_recording(cfg.record_improvements);
  return fs;
}

FilterSnapshot snapshot_filter(const FilterState& fs) {
  FilterSnapshot snap;
  for (int nb = 0; nb < fs.neighborhood_count(); ++nb) {
    snap.entries.push_back(
        {fs.neighborhoods()[nb], fs.threshold(nb), fs.counters(nb)});
  }
  return snap;
}

MoveSpec random_move_of(NeighborhoodId id, int n, Rng& rng) {
  if (id.is_swap()) {
    const int i = static_cast<int>(rng.next_int(1, n - 1));
    const int j = static_cast<int>(rng.next_int(i + 1, n));
    return {MoveKind::swap, i, j, 1};
  }
  const int l = id.block_len;
  if (rng.next_bool()) {
    const int i = static_cast<int>(rng.next_int(1, n - l));
    const int j = static_cast<int>(rng.next_int(i + l, n));
    return {MoveKind::block_fwd, i, j, l};
  }
  const int i = static_cast<int>(rng.next_int(2, n - l + 1));
  const int j = static_cast<int>(rng.next_int(1, i - 1));
  return {MoveKind::block_bwd, i, j, l};
}

}  // namespace

RunReport ils_rvnd(const Instance& inst, const SearchConfig& cfg, Rng& rng) {
  cfg.validate();
  const int n = inst.n;
  const auto neighborhoods = resolve_neighborhoods(cfg, n);
  const int i_ils = cfg.iterations > 0 ? cfg.iterations : 4 * n;
  FilterState fs = make_filter(neighborhoods, cfg);
  RunTracker tracker(cfg);
  RunReport report;

  // Target mode keeps restarting until the target (or a time limit) stops
  // the run; otherwise the restart budget applies.
  const std::uint64_t max_restarts =
      cfg.target ? std::numeric_limits<std::uint64_t>::max()
                 : static_cast<std::uint64_t>(cfg.restarts);

  for (std::uint64_t restart = 1; restart <= max_restarts; ++restart) {
    report.restarts = restart;
    Sequence seq = construct_randomized_insertion(inst, rng,
                                                  cfg.construction_k);
    EvalState state = recompute_prefixes(inst, seq);
    Sequence incumbent = seq;
    Cost incumbent_cost = state.total();
    bool stop = tracker.offer(incumbent, incumbent_cost);

    // The learning restart is more costly, so it runs on half budget.
    const int budget = (cfg.fast && restart == 1) ? i_ils / cfg.learning_divisor
                                                  : i_ils;
    int iter_ils = 0;
    while (!stop && iter_ils <= budget) {
      rvnd(inst, seq, state, fs, rng);
      ++report.iterations;
      if (state.total() < incumbent_cost) {
        incumbent = seq;
        incumbent_cost = state.total();
        iter_ils = 0;
        stop = tracker.offer(incumbent, incumbent_cost);
      } else {
        stop = tracker.should_stop();
      }
      if (stop) break;
      seq = perturb_double_bridge(incumbent, rng);
      state = recompute_prefixes(inst, seq);
      ++iter_ils;
    }
    if (cfg.fast && restart == 1 && fs.learning()) {
      fs.finalize_thresholds(cfg.theta);
    }
    if (stop || tracker.should_stop()) break;
  }

  tracker.fill(report);
  report.filter = snapshot_filter(fs);
  assert(report.best_cost == total_cost(inst, report.best_sequence));
  return report;
}

RunReport grasp(const Instance& inst, const SearchConfig& cfg, Rng& rng) {
  cfg.validate();
  const auto neighborhoods = resolve_neighborhoods(cfg, inst.n);
  FilterState fs = make_filter(neighborhoods, cfg);
  RunTracker tracker(cfg);
  RunReport report;

  const int learn_until =
      cfg.fast ? std::max(1, static_cast<int>(cfg.restarts *
                                              cfg.learning_fraction))
               : 0;
  const std::uint64_t max_restarts =
      cfg.target ? std::numeric_limits<std::uint64_t>::max()
                 : static_cast<std::uint64_t>(cfg.restarts);

  for (std::uint64_t restart = 1; restart <= max_restarts; ++restart) {
    report.restarts = restart;
    const double alpha = kGraspAlphas[rng.next_index(kGraspAlphas.size())];
    Sequence seq = construct_grasp(inst, alpha, rng);
    EvalState state = recompute_prefixes(inst, seq);
    rvnd(inst, seq, state, fs, rng);
    ++report.iterations;
    const bool stop = tracker.offer(seq, state.total());
    if (cfg.fast && restart == static_cast<std::uint64_t>(learn_until) &&
        fs.learning()) {
      fs.finalize_thresholds(cfg.theta);
    }
    if (stop) break;
  }

  tracker.fill(report);
  report.filter = snapshot_filter(fs);
  assert(report.best_cost == total_cost(inst, report.best_sequence));
  return report;
}

RunReport vns(const Instance& inst, const SearchConfig& cfg, Rng& rng) {
  cfg.validate();
  const int n = inst.n;
  const auto neighborhoods = resolve_neighborhoods(cfg, n);
  FilterState fs = make_filter(neighborhoods, cfg);
  RunTracker tracker(cfg);
  RunReport report;

  const int total_iters = cfg.iterations > 0 ? cfg.iterations : 1000;
  const int learn_until =
      cfg.fast ? std::max(1, static_cast<int>(total_iters *
                                              cfg.learning_fraction))
               : 0;
  const std::uint64_t max_iters =
      cfg.target ? std::numeric_limits<std::uint64_t>::max()
                 : static_cast<std::uint64_t>(total_iters);

  Sequence incumbent = construct_randomized_insertion(inst, rng,
                                                      cfg.construction_k);
  EvalState state = recompute_prefixes(inst, incumbent);
  rvnd(inst, incumbent, state, fs, rng);
  Cost incumbent_cost = state.total();
  report.iterations = 1;
  bool stop = tracker.offer(incumbent, incumbent_cost);
  if (cfg.fast && learn_until == 1 && fs.learning()) {
    fs.finalize_thresholds(cfg.theta);
  }

  int k = 0;
  const int count = static_cast<int>(neighborhoods.size());
  for (std::uint64_t it = 2; !stop && it <= max_iters; ++it) {
    Sequence seq = incumbent;
    EvalState cand_state = state;
    if (n >= 2) {
      apply_move(inst, seq, cand_state,
                 random_move_of(neighborhoods[k], n, rng));
    }
    rvnd(inst, seq, cand_state, fs, rng);
    ++report.iterations;
    if (cand_state.total() < incumbent_cost) {
      incumbent = seq;
      state = cand_state;
      incumbent_cost = cand_state.total();
      k = 0;
      stop = tracker.offer(incumbent, incumbent_cost);
    } else {
      k = (k + 1) % count;
      stop = tracker.should_stop();
    }
    if (cfg.fast && it == static_cast<std::uint64_t>(learn_until) &&
        fs.learning()) {
      fs.finalize_thresholds(cfg.theta);
    }
  }

  tracker.fill(report);
  report.filter = snapshot_filter(fs);
  assert(report.best_cost == total_cost(inst, report.best_sequence));
  return report;
}

RunReport run_algorithm(const std::string& algo, const Instance& inst,
                        const SearchConfig& cfg) {
  Rng rng(cfg.seed);
  if (algo == "ils") return ils_rvnd(inst, cfg, rng);
  if (algo == "grasp") return grasp(inst, cfg, rng);
  if (algo == "vns") return vns(inst, cfg, rng);
  throw std::invalid_argument("unknown algorithm: " + algo);
}

}  // namespace smtwt
