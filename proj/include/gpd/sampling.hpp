#pragma once

#include <random>

#include "gpd/rational.hpp"

namespace gpd {

// All pseudo-randomness in the project flows through mt19937_64 with
// explicit seeds and modulo draws, so scenarios and checks are reproducible
// across platforms.
using Rng = std::mt19937_64;

inline long draw(Rng& rng, long lo, long hi) {  // inclusive bounds
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline Rational random_rational(Rng& rng, long max_num = 3, long max_den = 3) {
  return rational_of(draw(rng, -max_num, max_num), draw(rng, 1, max_den));
}

inline Rational random_positive_rational(Rng& rng, long max_num = 5, long max_den = 3) {
  return rational_of(draw(rng, 1, max_num), draw(rng, 1, max_den));
}

inline GaussianRational random_gaussian(Rng& rng) {
  return GaussianRational(random_rational(rng), random_rational(rng));
}

}  // namespace gpd
