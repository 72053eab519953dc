#pragma once

#include <cmath>
#include <cstdint>

namespace slimcal {

// Fully specified 64-bit generators so that simulated frames are bit-identical
// across platforms and toolchains. Do not swap these for <random> engines:
// std::normal_distribution is implementation-defined.

// SplitMix64 finalizer (Steele, Lea, Flood). One bijective scramble step.
constexpr std::uint64_t splitmix64_step(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Sequential SplitMix64 stream.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1): top 53 bits of the next output.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Order-sensitive combiner for deriving substream seeds.
constexpr std::uint64_t seed_combine(std::uint64_t a, std::uint64_t b) {
  return splitmix64_step(a ^ (0x9e3779b97f4a7c15ULL + (b << 6) + (b >> 2)));
}

// Stateless standard normal draw addressed by (seed, index): hash both
// counters into two uniforms and apply Box-Muller. Any pixel's noise can be
// regenerated independently, which keeps rendering order-free.
inline double gaussian_at(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t h1 = splitmix64_step(seed_combine(seed, 2 * index));
  const std::uint64_t h2 = splitmix64_step(seed_combine(seed, 2 * index + 1));
  // u1 in (0, 1] so the log is finite; u2 in [0, 1).
  const double u1 =
      (static_cast<double>(h1 >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(h2 >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
}

}  // namespace slimcal
