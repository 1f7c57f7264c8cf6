#ifndef LIEDERIV_RNG_HPP
#define LIEDERIV_RNG_HPP

#include <random>

#include "liederiv/scalar.hpp"

namespace liederiv {

// Shared engine for generic-rank sampling. Fixed seed keeps runs reproducible;
// correctness never depends on the values drawn.
inline std::mt19937_64& global_rng() {
  thread_local std::mt19937_64 engine(0x11e0e61f5eedULL);
  return engine;
}

// Uniform Gaussian integer with both parts in [-10^6, 10^6].
inline GaussianRational random_gaussian_integer(std::mt19937_64& rng = global_rng()) {
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  return {make_rational(dist(rng)), make_rational(dist(rng))};
}

}  // namespace liederiv

#endif
