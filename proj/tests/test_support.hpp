#pragma once

#include <cstdint>
#include <random>

#include "harnack/lattice.hpp"

namespace harnack::testing {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

/// Weights e^U with U uniform in [-spread, spread].
inline EdgeWeights random_weights(int d, std::mt19937_64& gen, double spread = 1.0) {
  std::uniform_real_distribution<double> u(-spread, spread);
  Grid a(d, 0.0), b(d, 0.0), c(d, 0.0);
  for (Grid* g : {&a, &b, &c})
    for (double& x : g->values()) x = std::exp(u(gen));
  return EdgeWeights(a, b, c);
}

}  // namespace harnack::testing
