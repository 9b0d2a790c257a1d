#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "momentlab/tridiagonal.hpp"

namespace momentlab {

/// Right-continuous step function F(x) = #{x_i <= x} / n.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> sample);

  double operator()(double x) const;
  /// F(x-) = #{x_i < x} / n.
  double left_limit(double x) const;
  std::span<const double> sorted() const noexcept { return sorted_; }
  std::size_t size() const noexcept { return sorted_.size(); }

 private:
  std::vector<double> sorted_;
};

/// Either an empirical step function or a continuous distribution function.
/// Distance routines evaluate both at the jump points of the step arguments.
class Cdf {
 public:
  Cdf(EmpiricalCdf e);  // NOLINT(google-explicit-constructor)
  Cdf(std::function<double(double)> continuous);  // NOLINT

  double operator()(double x) const;
  double left_limit(double x) const;
  /// Empty for continuous functions.
  std::span<const double> jumps() const;
  bool is_step() const noexcept { return step_.has_value(); }

 private:
  std::optional<EmpiricalCdf> step_;
  std::function<double(double)> continuous_;
};

/// (2/pi) arcsin(sqrt(x)) on [0, 1].
double arcsine_cdf(double x);
/// Inverse of arcsine_cdf, sin^2(pi u / 2).
double arcsine_quantile(double u);

/// sup_x |F(x) - G(x)|, evaluated at every jump with both one-sided limits.
/// At least one argument must be a step function.
double ks_distance(const Cdf& f, const Cdf& g);

/// Levy distance inf{h : F(x - h) - h <= G(x) <= F(x + h) + h for all x},
/// by bisection on h to `tolerance`. Returns the upper end of the final
/// bracket, so the result never understates the distance by more than
/// rounding. At least one argument must be a step function.
double levy_distance(const Cdf& f, const Cdf& g, double tolerance = 1e-14);

/// (1/n) tr((J - D)^2) from the tridiagonal entries.
double levy_bound_statistic(const SymmetricTridiagonal& j,
                            const SymmetricTridiagonal& d);

/// Asymptotic p-value of the one-sample KS statistic with sample size n
/// (Kolmogorov distribution with the Stephens small-sample correction).
double ks_pvalue(double distance, std::size_t n);

/// Upper tail probability of a chi-square variable.
double chi_square_sf(double statistic, double dof);

enum class GammaPrefactor {
  kPaper,    ///< 2/m as printed with the theorem
  kDerived,  ///< (2/m)^2 = 1 / (t^T t)^2 from the eigenvector normalization
};

struct GammaMatrix {
  std::size_t m = 0;
  Eigen::MatrixXd gamma_raw;
  GammaPrefactor prefactor = GammaPrefactor::kDerived;

  double prefactor_value() const;
  /// prefactor_value() * gamma_raw.
  Eigen::MatrixXd covariance() const;
};

/// gamma_{k,l} assembled from the closed-form sums over shifted Chebyshev
/// polynomials (T_0 = 1) evaluated at the roots x_{k,m}.
GammaMatrix gamma_matrix(std::size_t m,
                         GammaPrefactor prefactor = GammaPrefactor::kDerived);

/// Cov(t_k^T S t_k, t_l^T S t_l) for the Gaussian tridiagonal limit S with
/// diagonal M and off-diagonal N, as an explicit finite sum.
Eigen::MatrixXd quadratic_form_covariance(std::size_t m);

/// Covariance of the diagonal block M_1..M_m of S.
Eigen::MatrixXd diagonal_limit_covariance(std::size_t m);
/// Covariance of the off-diagonal block N_1..N_{m-1} of S.
Eigen::MatrixXd offdiagonal_limit_covariance(std::size_t m);

struct IntermediateCovariances {
  Eigen::MatrixXd a;  ///< A_{2m-1}, limit covariance of the Xi vector
  Eigen::MatrixXd v;  ///< block diagonal diag(A_m, V22), (2m-1) x (2m-1)
};

/// Requires m >= 2.
IntermediateCovariances intermediate_covariances(std::size_t m);

struct CovarianceEstimate {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;
  std::size_t count = 0;
};

/// Unbiased sample covariance. Needs >= 2 samples of equal dimension.
CovarianceEstimate covariance_estimate(
    std::span<const std::vector<double>> samples);

}  // namespace momentlab
