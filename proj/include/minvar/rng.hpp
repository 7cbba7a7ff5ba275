// Deterministic RNG for randomized checks. splitmix64 is small, seedable and
// stable across platforms, so seeded runs produce byte-identical output.
#pragma once

#include <cstdint>

#include "minvar/rational.hpp"

namespace minvar {

inline constexpr std::uint64_t kDefaultSeed = 1729;

class Rng {
  public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive.
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Default sampling range for rational specializations: integers in [-9, 9].
    Rat small_rat() { return Rat(uniform(-9, 9)); }

    // Independent stream for sample index i, so per-sample work is
    // reproducible regardless of evaluation order.
    Rng split(std::uint64_t i) const { return Rng(state_ ^ (0x5851f42d4c957f2dULL * (i + 1))); }

  private:
    std::uint64_t state_;
};

}  // namespace minvar
