#ifndef SMTWT_GENERATOR_HPP
#define SMTWT_GENERATOR_HPP

#include <cstdint>

#include "smtwt/instance.hpp"

namespace smtwt {

// Random-instance generator in the style of the classical benchmark groups:
// tau controls due-date tightness, r the due-date range and eta the ratio of
// mean setup to mean processing time. The exact distributions are this
// project's own (documented in the README); they are meant for property
// tests and relative comparisons, not for reproducing published numbers.
struct GeneratorConfig {
  int n = 60;
  double tau = 0.3;
  double r = 0.25;
  double eta = 0.25;
  std::uint64_t seed = 1;

  void validate() const;
};

// Deterministic under seed. Draw order: processing times, setup matrix
// (row-major), due dates, weights.
//   p_j  ~ U[50, 150]
//   s_ij ~ U[0, round(2 * eta * 100)], diagonal zeroed
//   d_j  ~ U[max(0, round(T*(1 - tau - r/2))), round(T*(1 - tau + r/2))]
//          with T = sum(p) + n * mean setup
//   w_j  ~ U[1, 10]
Instance generate_instance(const GeneratorConfig& config);

}  // namespace smtwt

#endif
