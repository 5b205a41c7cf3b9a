#pragma once
// Deterministic random streams for sampling and property tests.
//
// Reproducibility contract: the same (seed, index) pair yields the same
// values on every run and platform. mt19937_64 is bit-exact by definition;
// the uniform and Gaussian mappings are written out explicitly because the
// standard <random> distributions are free to differ between library
// implementations.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace fermi {

/// One splitmix64 step: advances the state and returns a whitened value.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Independent stream for item `index` under a master seed: the engine is
  /// seeded with a splitmix64 hash of (seed, index), so streams can be
  /// created in any order (or in parallel) with identical results.
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed;
    std::uint64_t h = splitmix64(s);
    s = h ^ (0x9e3779b97f4a7c15ull * (index + 1));
    return Rng(splitmix64(s));
  }

  /// Uniform double in [0, 1): top 53 bits of the engine output.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (explicit, for bit stability).
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  /// Complex with independent standard-normal real and imaginary parts.
  std::complex<double> cgaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace fermi
