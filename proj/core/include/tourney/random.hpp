#pragma once

#include <cstdint>
#include <random>

namespace tourney {

/// Seeded generator behind every instance generator.
///
/// The bit stream is std::mt19937_64, which the standard pins exactly. The
/// derived draws below are defined here rather than via <random>
/// distributions, whose output differs between standard libraries, so the
/// same seed gives the same instance on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Top bit of one draw.
  bool coin() { return (next() >> 63) != 0; }

  /// Uniform in [0, bound) by rejection of the biased tail. bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tourney
