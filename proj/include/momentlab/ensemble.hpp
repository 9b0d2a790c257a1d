#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "momentlab/tridiagonal.hpp"
#include "momentlab/types.hpp"

namespace momentlab {

/// A uniformly distributed point of the moment space of order 2n - 1,
/// identified by (seed, replicate).
struct EnsembleSpec {
  std::size_t n = 1;
  std::uint64_t seed = 0;
  std::uint64_t replicate = 0;
};

/// Random canonical moments p_1, ..., p_L with p_j ~ Beta(2n - j, 2n - j).
/// L is 2n - 1 for a full sample, smaller for a prefix sample.
struct CanonicalSample {
  std::size_t n = 1;
  CanonicalVector p;

  /// alpha_j = 2 p_{j+1} - 1 for j >= 0, and alpha_{-1} = -1.
  double alpha(long j) const;
  ZetaVector zeta() const;
};

/// Full sample of length 2n - 1.
CanonicalSample sample_canonical(const EnsembleSpec& spec);

/// First `length` coordinates of sample_canonical(spec), bit-identical to
/// the corresponding prefix of the full sample.
CanonicalSample sample_canonical_prefix(const EnsembleSpec& spec,
                                        std::size_t length);

/// m x m Jacobi matrix: diagonal (Xi_1, Xi_2 + Xi_3, ...,
/// Xi_{2m-2} + Xi_{2m-1}), off-diagonal sqrt(Xi_{2k-1} Xi_{2k}), where
/// Xi = zeta of the sample. Needs m <= n and 2m - 1 sampled coordinates.
SymmetricTridiagonal build_jacobi(const CanonicalSample& s, std::size_t m);

/// n x n Killip-Nenciu matrix with
///   b_{k+1} = (1 - alpha_{2k-1}) alpha_{2k} - (1 + alpha_{2k-1}) alpha_{2k-2}
///   a_{k+1} = sqrt((1 - alpha_{2k-1}) (1 - alpha_{2k}^2) (1 + alpha_{2k+1})).
/// Equals 4 build_jacobi(s, n) - 2 I.
SymmetricTridiagonal build_killip_nenciu(const CanonicalSample& s);

/// max |kn - (4 jacobi - 2 I)| over all stored entries.
double max_affine_deviation(const SymmetricTridiagonal& killip_nenciu,
                            const SymmetricTridiagonal& jacobi);

/// log of the normalizing constant of the joint root density,
/// -log Gamma(n + 1) + sum_{r<n} [log Gamma(2r + 2n) - 2 log Gamma(2r + 1)
///                                - log Gamma(2r + 2)].
double log_root_density_constant(std::size_t n);

/// log of c * prod_{i<j} |x_i - x_j|^4 on [0, 1]^n; -infinity off support
/// or on coincident coordinates.
double joint_root_log_density(const std::vector<double>& x, std::size_t n);

/// Sum over j = 1..2n-1 of the Beta(2n - j, 2n - j) log density at p_j.
double canonical_log_density(const CanonicalVector& p, std::size_t n);

}  // namespace momentlab
