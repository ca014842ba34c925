#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace raytwin {

// Counter-based random stream keyed on (global seed, ordered entity id pair).
// Every draw is a pure function of the key and the draw counter, so identical
// seed material reproduces the identical sequence bit for bit, independent of
// standard-library distribution internals.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint32_t id_a, std::uint32_t id_b)
      : key_(mix(mix(seed ^ 0x5851f42d4c957f2dULL) ^
                 ((std::uint64_t(id_a) << 32) | std::uint64_t(id_b)))) {}

  // Uniform in [0, 1).
  double next_uniform() {
    const std::uint64_t h = mix(key_ ^ (counter_++ * 0xd1342543de82ef95ULL));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; consumes exactly two uniforms.
  double next_gaussian() {
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }

  std::uint64_t draws() const { return counter_; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace raytwin
