#include "spq/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spq {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng Rng::substream(std::uint64_t id) const {
  // Mix (seed, id) through two rounds so adjacent ids decorrelate.
  std::uint64_t s = seed_ ^ (id * 0xda942042e4dd58b5ULL + 0x2545f4914f6cdd1dULL);
  (void)splitmix64(s);
  return Rng(splitmix64(s));
}

std::uint64_t Rng::next_u64() { return splitmix64(state_); }

double Rng::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
  // Rejection sampling for an unbiased draw.
  std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % bound;
}

double Rng::laplace(double b) {
  double u = next_unit() - 0.5;  // [-0.5, 0.5)
  // Inverse CDF; ln argument stays in (0, 1].
  double mag = -b * std::log(1.0 - 2.0 * std::abs(u));
  return u < 0 ? -mag : mag;
}

double Rng::gaussian(double sigma) {
  double u1 = 1.0 - next_unit();  // (0, 1]
  double u2 = next_unit();
  return sigma * std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

double sample(const NoiseSpec& spec, Rng& rng) {
  switch (spec.family) {
    case NoiseFamily::None:
      return 0.0;
    case NoiseFamily::Laplace:
      if (!(spec.scale > 0)) throw std::invalid_argument("Laplace scale must be positive");
      return rng.laplace(spec.scale);
    case NoiseFamily::Gaussian:
      if (!(spec.scale > 0)) throw std::invalid_argument("Gaussian scale must be positive");
      return rng.gaussian(spec.scale);
  }
  throw std::invalid_argument("unknown noise family");
}

}  // namespace spq
