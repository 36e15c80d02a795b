#ifndef SMTWT_RNG_HPP
#define SMTWT_RNG_HPP

#include <cstdint>
#include <random>

namespace smtwt {

// Seeded random source used everywhere in the library. The raw stream is
// std::mt19937_64, whose output is fully specified by the standard; bounded
// draws are done with our own rejection loop instead of
// std::uniform_int_distribution, so identical seeds reproduce identical runs
// on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    const auto range = static_cast<std::uint64_t>(hi - lo);
    if (range == UINT64_MAX) return static_cast<std::int64_t>(gen_());
    const std::uint64_t bound = range + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw;
    do {
      draw = gen_();
    } while (draw >= limit);
    return lo + static_cast<std::int64_t>(draw % bound);
  }

  int next_index(int size) { return static_cast<int>(next_int(0, size - 1)); }

  // Uniform in [0, 1).
  double next_fraction() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  bool next_bool() { return (gen_() & 1u) != 0; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace smtwt

#endif
