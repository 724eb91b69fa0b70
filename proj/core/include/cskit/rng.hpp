/**
 * @file rng.hpp
 * @brief Deterministic, splittable pseudo-random generator.
 *
 * Every randomized routine in the library draws from this generator so that a
 * fixed seed reproduces byte-identical results across platforms.  The core is
 * splitmix64, whose output stream is fully specified by the algorithm (unlike
 * std::uniform_real_distribution, whose mapping is implementation-defined).
 *
 * Streams can be split: `rng.split(k)` yields an independent child generator
 * derived from the parent seed and the index k.  Per-trial children keep
 * results stable when the number of draws inside one trial changes.
 */
#pragma once

#include <cstdint>

namespace cskit {

class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

  /// Next raw 64-bit word (splitmix64).
  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).  Uses the top 53 bits, so the mapping is exact
  /// and platform-independent.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n) { return next_u64() % n; }

  /// Independent child generator number `index`.
  Rng split(std::uint64_t index) const {
    Rng probe(state_ ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    // One scramble so adjacent indices do not produce adjacent states.
    probe.state_ = probe.next_u64();
    return probe;
  }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace cskit
