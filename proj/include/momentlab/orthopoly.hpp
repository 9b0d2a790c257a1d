#pragma once

#include <cstddef>
#include <vector>

#include "momentlab/tridiagonal.hpp"
#include "momentlab/types.hpp"

namespace momentlab {

/// Dense ascending coefficients; the leading coefficient is exactly 1.
struct MonicPolynomial {
  std::vector<double> coefficients;

  std::size_t degree() const noexcept { return coefficients.size() - 1; }
  /// Horner evaluation.
  double operator()(double x) const;
};

/// Chebyshev reference data for degree m: the roots x_{k,m} in descending
/// order and the eigenvectors t_{k,m} of chebyshev_matrix(m).
struct ChebyshevGrid {
  std::size_t m = 0;
  std::vector<double> roots;
  std::vector<std::vector<double>> eigvecs;
};

/// Degree-m monic orthogonal polynomial from the three-term recurrence
/// P_{j+1} = (x - zeta_{2j} - zeta_{2j+1}) P_j - zeta_{2j-1} zeta_{2j} P_{j-1}
/// with P_0 = 1, P_1 = x - zeta_1. Needs z.size() >= 2m - 1.
MonicPolynomial monic_from_zeta(const ZetaVector& z, std::size_t m);

/// Same polynomial as a ratio of Hankel-bordered determinants expanded by
/// cofactors. Exponential cost and poor conditioning: a test oracle for
/// m <= 8, not a production route.
MonicPolynomial hankel_polynomial(const MomentVector& c, std::size_t m);

/// Shifted Chebyshev polynomial of the first kind on [0, 1],
/// T_j(x) = cos(j arccos(2x - 1)), evaluated by its three-term recurrence.
double chebyshev_T(std::size_t j, double x);

/// Roots of T_m, x_{k,m} = (cos((2k - 1) pi / (2m)) + 1) / 2, k = 1..m.
std::vector<double> chebyshev_roots(std::size_t m);

/// Jacobi matrix of the arcsine law: diagonal 1/2, off-diagonal
/// (1/(2 sqrt 2), 1/4, 1/4, ...).
SymmetricTridiagonal chebyshev_matrix(std::size_t m);

/// t_{k,m} = (1/sqrt 2, cos(theta), ..., cos((m-1) theta)) with
/// theta = (2k - 1) pi / (2m). Eigenvector of chebyshev_matrix(m) for
/// x_{k,m}; squared norm m/2. Note the first entry uses T_0 = 1/sqrt 2,
/// unlike chebyshev_T.
std::vector<double> chebyshev_eigvec(std::size_t m, std::size_t k);

ChebyshevGrid chebyshev_grid(std::size_t m);

}  // namespace momentlab
