#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "momentlab/types.hpp"

namespace momentlab {

/// Feasible interval [lower, upper] of the next moment given a prefix.
struct MomentRange {
  double lower;
  double upper;

  double width() const noexcept { return upper - lower; }
};

/// zeta_1 = p_1, zeta_j = (1 - p_{j-1}) p_j.
/// Throws BoundaryError if some p_j is outside [eps, 1 - eps].
ZetaVector canonical_to_zeta(const CanonicalVector& p);

/// Inverse of canonical_to_zeta. Throws BoundaryError when a divisor
/// q_{j-1} = 1 - p_{j-1} is <= eps.
CanonicalVector zeta_to_canonical(const ZetaVector& z);

/// Moments c_1..c_k of the measure whose recurrence coefficients come from
/// z, i.e. c_j = e_1^T J^j e_1 for the Jacobi matrix of z. c_j depends only
/// on zeta_1..zeta_j, so k <= z.size() is required.
MomentVector zeta_to_moments(const ZetaVector& z, std::size_t k);

/// Recover zeta from moments with the Chebyshev moment-to-recurrence
/// algorithm. Throws NonInteriorError with the first failing index when the
/// input is not strictly interior.
///
/// The map is increasingly ill-conditioned in the length: an absolute error
/// of one ulp in c_k moves p_k by roughly ulp / prod_{j<k} p_j (1 - p_j).
/// Lengths beyond ~15 work but lose many digits.
ZetaVector moments_to_zeta(const MomentVector& c);

CanonicalVector moments_to_canonical(const MomentVector& c);

/// Convenience composition of canonical_to_zeta and zeta_to_moments.
MomentVector canonical_to_moments(const CanonicalVector& p);

/// (c_k^-, c_k^+) for k = prefix.size() + 1. The empty prefix gives (0, 1).
MomentRange moment_range(const MomentVector& prefix);

/// r_k = prod_{j<k} p_j (1 - p_j), the width of the feasible range for the
/// moment following `prefix`.
double range_width(const CanonicalVector& prefix);

/// k-th moment of the arcsine law on [0, 1], binom(2k, k) / 4^k.
double arcsine_moment(std::size_t k);

/// Sigma = (1/2) (c0_{i+j} - c0_i c0_j), i, j = 1..k.
Eigen::MatrixXd sigma_matrix(std::size_t k);

/// log of prod_{j=1}^{n} Gamma(j)^2 / Gamma(2j).
double log_moment_space_volume(std::size_t n);
double moment_space_volume(std::size_t n);

}  // namespace momentlab
