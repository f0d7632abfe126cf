#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "circlepack/genseq.hpp"

namespace testing {

/// Seeded draws for hand-rolled property generators.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(circlepack::make_rng(seed)) {}

  double uniform(double lo, double hi) { return lo + circlepack::uniform01(rng_) * (hi - lo); }
  int below(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }
  bool coin() { return (rng_() & 1) != 0; }
  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace testing
