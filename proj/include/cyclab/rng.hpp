#pragma once

#include <cstdint>
#include <numeric>
#include <random>

#include "cyclab/rational.hpp"

namespace cyclab {

/* Deterministic sampling source.  All audits draw randomness through this
   class so a fixed seed reproduces the identical run on any platform; the
   slight modulo bias of uniform() is irrelevant for law sampling. */
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }

  /* Uniform-ish integer in [lo, hi], inclusive. */
  long long uniform(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /* Random reduced fraction in [0, 1] with denominator <= max_den >= 1. */
  Rational unit_rational(long long max_den) {
    const long long q = uniform(1, max_den);
    const long long p = uniform(0, q);
    return Rational(p, q);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace cyclab
