#ifndef GIBBSNUM_RNG_HPP
#define GIBBSNUM_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "gibbsnum/rational.hpp"

namespace gibbsnum {

// Deterministic generator: same seed, same stream, on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  long uniform_int(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(eng_() % static_cast<uint64_t>(hi - lo + 1));
  }

  // Inverse-CDF draw from cumulative weights (last entry must be ~1).
  int sample(const std::vector<double>& cumulative) {
    double u = uniform01();
    for (size_t k = 0; k + 1 < cumulative.size(); ++k)
      if (u < cumulative[k]) return static_cast<int>(k);
    return static_cast<int>(cumulative.size()) - 1;
  }

  static std::vector<double> cumulative(const std::vector<Rational>& weights) {
    std::vector<double> cum;
    cum.reserve(weights.size());
    Rational running(0);
    for (const Rational& w : weights) {
      running += w;
      cum.push_back(rational_to_double(running));
    }
    return cum;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace gibbsnum

#endif
