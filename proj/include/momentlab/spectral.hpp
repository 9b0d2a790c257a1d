#pragma once

#include <cstddef>
#include <vector>

#include "momentlab/tridiagonal.hpp"
#include "momentlab/types.hpp"

namespace momentlab {

/// Ascending eigenvalues.
struct Spectrum {
  std::vector<double> eigenvalues;
};

/// The n-point Gauss measure of a Jacobi matrix: support = eigenvalues,
/// weights = squared first components of the normalized eigenvectors.
struct PrincipalRepresentation {
  std::vector<double> support;
  std::vector<double> weights;
};

enum class EigenMethod {
  kImplicitQL,
  kBisection,
};

/// Sweeps per eigenvalue before the QL iteration gives up.
inline constexpr int kMaxQLSweeps = 50;

/// Throws ConvergenceError if the QL iteration exceeds its budget.
Spectrum eigenvalues(const SymmetricTridiagonal& t,
                     EigenMethod method = EigenMethod::kImplicitQL);

/// Number of eigenvalues strictly less than x (Sturm sequence count).
std::size_t sturm_count(const SymmetricTridiagonal& t, double x);

/// Requires strictly positive off-diagonal entries.
PrincipalRepresentation principal_representation(const SymmetricTridiagonal& t);

/// c_j = sum_i w_i x_i^j for j = 1..k, from the principal representation.
MomentVector spectral_moments(const SymmetricTridiagonal& t, std::size_t k);

}  // namespace momentlab
