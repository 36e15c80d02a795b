#include "smtwt/generator.hpp"

#include <cmath>
#include <stdexcept>

#include "smtwt/rng.hpp"

namespace smtwt {

void GeneratorConfig::validate() const {
  if (n < 1) throw std::invalid_argument("generator: n must be positive");
  auto fraction = [](double value, const char* what) {
    if (value < 0.0 || value > 1.0) {
      throw std::invalid_argument(std::string("generator: ") + what +
                                  " must be in [0, 1]");
    }
  };
  fraction(tau, "tau");
  fraction(r, "r");
  fraction(eta, "eta");
}

Instance generate_instance(const GeneratorConfig& config) {
  config.validate();
  Rng rng(config.seed);
  Instance inst(config.n);

  Time p_sum = 0;
  for (int j = 1; j <= config.n; ++j) {
    inst.p[j] = rng.next_int(50, 150);
    p_sum += inst.p[j];
  }

  const Time setup_max = std::llround(2.0 * config.eta * 100.0);
  for (int i = 0; i <= config.n; ++i) {
    for (int j = 0; j <= config.n; ++j) {
      inst.set_setup(i, j, i == j ? 0 : rng.next_int(0, setup_max));
    }
  }

  const double horizon =
      static_cast<double>(p_sum) +
      config.n * static_cast<double>(setup_max) / 2.0;
  const Time d_lo = std::max<Time>(
      0, std::llround(horizon * (1.0 - config.tau - config.r / 2.0)));
  const Time d_hi = std::llround(horizon * (1.0 - config.tau + config.r / 2.0));
  for (int j = 1; j <= config.n; ++j) {
    inst.d[j] = rng.next_int(d_lo, d_hi);
  }

  for (int j = 1; j <= config.n; ++j) {
    inst.w[j] = rng.next_int(1, 10);
  }
  return inst;
}

}  // namespace smtwt
