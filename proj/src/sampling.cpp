#include "dag/sampling.hpp"

#include <stdexcept>

namespace dag {

std::uint64_t hash64(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Sampler::Sampler(std::uint64_t seed, long bound) : engine_(seed), bound_(bound) {
  if (bound < 2) throw std::invalid_argument("sampler bound must be >= 2");
}

long Sampler::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

double Sampler::real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

Scalar Sampler::rational() { return Scalar(integer(-bound_, bound_), integer(1, bound_)); }

Scalar Sampler::nonzero_rational() {
  long n = 0;
  while (n == 0) n = integer(-bound_, bound_);
  return Scalar(n, integer(1, bound_));
}

Scalar Sampler::unit_fraction() {
  long d = integer(2, bound_);
  return Scalar(integer(1, d - 1), d);
}

Scalar Sampler::positive_rational() { return Scalar(integer(1, bound_), integer(1, bound_)); }

}  // namespace dag
