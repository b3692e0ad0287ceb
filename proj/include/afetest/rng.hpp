#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace afetest {

// Seedable 64-bit generator used everywhere randomness is needed.
//
// The engine is std::mt19937_64, whose output sequence is fully specified by
// the standard. All derived draws (bounded integers, uniforms, normals) are
// implemented here rather than with std::*_distribution, so that a given seed
// produces the same stream on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform index in [0, k). Rejection sampling, bias-free.
  std::size_t uniform_index(std::size_t k) {
    const std::uint64_t n = static_cast<std::uint64_t>(k);
    const std::uint64_t limit = (UINT64_MAX / n) * n;
    std::uint64_t r;
    do {
      r = eng_();
    } while (r >= limit);
    return static_cast<std::size_t>(r % n);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller. Two uniforms per call, the sine branch
  // is deliberately discarded to keep the draw count per value fixed.
  double normal() {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  std::mt19937_64 eng_;
};

// Decorrelates seeds derived from a common base (splitmix64 finalizer).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + salt * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace afetest
