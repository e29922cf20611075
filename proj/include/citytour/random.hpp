#ifndef CITYTOUR_RANDOM_HPP
#define CITYTOUR_RANDOM_HPP

#include <random>

namespace citytour {

// All seeded generation goes through mt19937_64 plus this fixed 53-bit
// mapping instead of std::uniform_real_distribution, whose algorithm is
// implementation-defined. Output is therefore bit-identical across
// standard libraries and platforms.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform draw from [lo, hi).
inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + uniform01(rng) * (hi - lo);
}

}  // namespace citytour

#endif  // CITYTOUR_RANDOM_HPP
