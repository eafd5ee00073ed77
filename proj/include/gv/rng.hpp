#ifndef GV_RNG_HPP
#define GV_RNG_HPP

#include <cstdint>

#include "gv/rational.hpp"

namespace gv {

// SplitMix64. Hand-rolled so that seeded runs are bit-identical across
// platforms and standard-library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish integer in [lo, hi], inclusive. Modulo bias is irrelevant
  // at the ranges used here.
  int range(int lo, int hi) {
    if (hi <= lo) return lo;
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool coin() { return (next() & 1u) != 0; }

  // Small rational with numerator in [-mag, mag] and denominator in [1, den_max].
  Rational rational(int mag = 3, int den_max = 2) {
    return rat(range(-mag, mag), range(1, den_max));
  }

 private:
  std::uint64_t state_;
};

}  // namespace gv

#endif
