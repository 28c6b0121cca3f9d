#pragma once

#include <cstdint>
#include <random>

namespace evencycle {

// std:: distributions differ between standard libraries; these do not, so
// seeded output is identical everywhere.
using Rng = std::mt19937_64;

// Uniform in [0, bound), bound > 0. Rejection sampling, no modulo bias.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = Rng::max() - Rng::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(Rng& rng, double p) { return uniform_unit(rng) < p; }

}  // namespace evencycle
