#pragma once

#include "elevenvertex/matrix.hpp"
#include "elevenvertex/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace elv {

// Seeded source of small random rationals for identity testing. Numerators
// are drawn from [-9,9]\{0} and denominators from [1,9]; call sites reject
// the degenerate loci of their formulas (z=0, z=w, z+w+eta=0, q=0, ...) and
// resample. Raw draws avoid std::uniform_int_distribution so a given seed
// produces the same stream on every platform.
class RatSampler {
 public:
  explicit RatSampler(uint64_t seed) : g_(seed) {}

  uint64_t raw() { return g_(); }

  Rat value() {
    long long num = 0;
    while (num == 0) num = static_cast<long long>(raw() % 19) - 9;
    long long den = 1 + static_cast<long long>(raw() % 9);
    return rat(num, den);
  }

  // A value distinct from everything in `avoid` (all draws are nonzero).
  Rat value_avoiding(std::initializer_list<Rat> avoid) {
    for (;;) {
      Rat v = value();
      bool ok = true;
      for (const Rat& a : avoid)
        if (v == a) ok = false;
      if (ok) return v;
    }
  }

  // Spectral pair with z, w, z-w, z+w and z+w+shift all nonzero.
  std::pair<Rat, Rat> spectral_pair(const Rat& shift = Rat(0)) {
    for (;;) {
      Rat z = value();
      Rat w = value();
      if (z == w || z == -w || z + w + shift == 0) continue;
      return {z, w};
    }
  }

  Mat2<Rat> mat2() {
    Mat2<Rat> m;
    for (auto& x : m.e) x = value();
    return m;
  }

 private:
  std::mt19937_64 g_;
};

}  // namespace elv
