#pragma once

#include <cstdint>
#include <random>

#include "dag/scalar.hpp"

namespace dag {

/// splitmix64 finalizer applied to (seed, index); used to derive an
/// independent stream per campaign trial.
std::uint64_t hash64(std::uint64_t seed, std::uint64_t index);

/// Draws bounded random rationals n/d, n in [-bound, bound], d in [1, bound].
class Sampler {
 public:
  Sampler(std::uint64_t seed, long bound);

  long bound() const { return bound_; }

  Scalar rational();
  Scalar nonzero_rational();
  /// Rational strictly inside (0, 1), denominator at most `bound`.
  Scalar unit_fraction();
  /// Rational with 0 < value <= bound.
  Scalar positive_rational();
  long integer(long lo, long hi);
  double real(double lo, double hi);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  long bound_;
};

}  // namespace dag
