// Seeded deterministic randomness. All draws go through this wrapper;
// std::uniform_int_distribution is implementation-defined and must not
// appear anywhere.
#pragma once

#include <cstdint>
#include <random>

#include "cglab/rational.hpp"

namespace cglab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n). Modulo bias is ~n/2^64, irrelevant at lab scale.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  // Uniform integer in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Exact rational in [0, 1] on the grid {0, 1/den, ..., den/den}.
  Rational unit(long den = 1000) {
    return Rational(static_cast<long>(below(static_cast<std::uint64_t>(den) + 1)),
                    den);
  }

  // Derives an independent stream; used to give each sample its own seed.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace cglab
