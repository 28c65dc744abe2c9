#pragma once

// Deterministic randomness. One root seed; every consumer takes a split
// stream keyed by index, so parallel evaluation order never changes results.
// Distributions are hand-rolled (uniform via 53-bit mantissa, normal via
// Box-Muller) because the std:: distributions are implementation-defined.

#include <cmath>
#include <cstdint>
#include <random>

namespace atiyah {

inline uint64_t splitmix64_next(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// collapse (seed, stream) into one well-mixed 64-bit state
inline uint64_t split_seed(uint64_t seed, uint64_t stream) {
  uint64_t s = seed;
  uint64_t a = splitmix64_next(s);
  s ^= stream * 0x9e3779b97f4a7c15ULL;
  uint64_t b = splitmix64_next(s);
  return a ^ (b + 0x632be59bd9b4e019ULL + (a << 6) + (a >> 2));
}

class Rng {
 public:
  explicit Rng(uint64_t seed, uint64_t stream = 0) : gen_(split_seed(seed, stream)) {}

  uint64_t bits() { return gen_(); }

  // uniform in [0, 1) with 53-bit resolution
  double uniform01() { return double(gen_() >> 11) * (1.0 / 9007199254740992.0); }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + int(gen_() % uint64_t(hi - lo + 1));
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01(), u2 = uniform01();
    while (u1 <= 1e-300) u1 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double th = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace atiyah
