#ifndef SMTWT_INSTANCE_HPP
#define SMTWT_INSTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace smtwt {

using Cost = std::int64_t;
using Time = std::int64_t;

// One-machine instance: n jobs with processing time p, due date d and weight
// w, plus an (n+1)x(n+1) sequence-dependent setup matrix. Job ids run 1..n;
// id 0 is the dummy job fixed at the head of every sequence, so setup(0, j)
// is the setup paid before the first real job. p/d/w are stored with an
// unused slot at index 0 to keep all indexing 1-based.
struct Instance {
  int n = 0;
  std::vector<Time> p;
  std::vector<Time> d;
  std::vector<Cost> w;

  Instance() = default;
  explicit Instance(int jobs)
      : n(jobs),
        p(jobs + 1, 0),
        d(jobs + 1, 0),
        w(jobs + 1, 0),
        setups_((jobs + 1) * static_cast<std::size_t>(jobs + 1), 0) {}

  Time setup(int from, int to) const {
    return setups_[static_cast<std::size_t>(from) * (n + 1) + to];
  }
  void set_setup(int from, int to, Time value) {
    setups_[static_cast<std::size_t>(from) * (n + 1) + to] = value;
  }

  // Raw matrix access for parsers and the generator (row-major, stride n+1).
  std::vector<Time>& setup_data() { return setups_; }
  const std::vector<Time>& setup_data() const { return setups_; }

 private:
  std::vector<Time> setups_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> errors;

  std::string to_string() const;
};

// Checks dimensions and non-negativity. Collects every violation instead of
// stopping at the first one; never throws.
ValidationReport validate_instance(const Instance& inst);

}  // namespace smtwt

#endif
