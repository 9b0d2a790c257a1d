#pragma once

#include <cstdint>
#include <random>

namespace momentlab {

/// SplitMix64 finalizer: a bijective 64-bit avalanche mix.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Generator seed for one replicate: mix64(seed ^ mix64(replicate)).
/// Replicates get independent streams regardless of scheduling order.
std::uint64_t replicate_seed(std::uint64_t seed, std::uint64_t replicate) noexcept;

/// Per-replicate random source. Variates are built directly on top of the
/// engine's 64-bit output so that streams are identical across standard
/// library implementations (std:: distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::uint64_t replicate)
      : engine_(replicate_seed(seed, replicate)) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform();
  /// Standard normal (Marsaglia polar method, spare value cached).
  double normal();
  /// Gamma(shape, 1) for shape >= 1 by the Marsaglia-Tsang squeeze method.
  double gamma(double shape);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Beta(a, a) as G1 / (G1 + G2) with independent Gamma(a) variates, clamped
/// into [eps, 1 - eps].
double sample_beta_symmetric(double a, Rng& rng);

}  // namespace momentlab
