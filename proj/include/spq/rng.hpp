#pragma once

#include <cstdint>

namespace spq {

/// Deterministic 64-bit generator (splitmix64). The same seed always yields
/// the same draw sequence, independent of platform or standard library.
/// Sub-streams derived via substream() are statistically independent and do
/// not depend on how many draws were taken from the parent.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  /// Derived generator keyed by (original seed, id). Used to give workers
  /// (per-tree, per-trial, ...) reproducible independent noise.
  Rng substream(std::uint64_t id) const;

  std::uint64_t next_u64();

  /// Uniform double in [0, 1), 53 random bits.
  double next_unit();

  /// Uniform integer in [0, bound).
  std::uint64_t next_below(std::uint64_t bound);

  /// Zero-mean Laplace draw with scale b (inverse CDF).
  double laplace(double b);

  /// Zero-mean Gaussian draw with standard deviation sigma (Box-Muller).
  double gaussian(double sigma);

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

enum class NoiseFamily { None, Laplace, Gaussian };

/// Noise family plus scale (Laplace b or Gaussian sigma). Family None draws
/// exactly 0 and is used for oracle-equivalence testing.
struct NoiseSpec {
  NoiseFamily family = NoiseFamily::None;
  double scale = 0.0;

  static NoiseSpec none() { return {NoiseFamily::None, 0.0}; }
  static NoiseSpec laplace(double b) { return {NoiseFamily::Laplace, b}; }
  static NoiseSpec gaussian(double sigma) { return {NoiseFamily::Gaussian, sigma}; }
};

/// One draw from the spec. Throws std::invalid_argument on a non-positive
/// scale for Laplace/Gaussian.
double sample(const NoiseSpec& spec, Rng& rng);

}  // namespace spq
