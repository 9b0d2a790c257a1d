#include "momentlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "momentlab/errors.hpp"
#include "momentlab/orthopoly.hpp"

namespace momentlab {

EmpiricalCdf::EmpiricalCdf(std::vector<double> sample)
    : sorted_(std::move(sample)) {
  if (sorted_.empty()) throw DomainError("EmpiricalCdf needs a nonempty sample");
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) /
         static_cast<double>(sorted_.size());
}

double EmpiricalCdf::left_limit(double x) const {
  const auto it = std::lower_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) /
         static_cast<double>(sorted_.size());
}

Cdf::Cdf(EmpiricalCdf e) : step_(std::move(e)) {}
Cdf::Cdf(std::function<double(double)> continuous)
    : continuous_(std::move(continuous)) {}

double Cdf::operator()(double x) const {
  return step_ ? (*step_)(x) : continuous_(x);
}

double Cdf::left_limit(double x) const {
  return step_ ? step_->left_limit(x) : continuous_(x);
}

std::span<const double> Cdf::jumps() const {
  return step_ ? step_->sorted() : std::span<const double>{};
}

double arcsine_cdf(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("arcsine_cdf: x outside [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  return 2.0 / std::numbers::pi * std::asin(std::sqrt(x));
}

double arcsine_quantile(double u) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw DomainError("arcsine_quantile: u outside [0, 1]");
  }
  const double s = std::sin(0.5 * std::numbers::pi * u);
  return s * s;
}

namespace {

void require_step(const Cdf& f, const Cdf& g) {
  if (!f.is_step() && !g.is_step()) {
    throw DomainError("distance needs at least one empirical argument");
  }
}

// sup_x [F(x - h) - G(x)] and sup_x [G(x) - F(x + h)]; each is attained at a
// jump of G or a shifted jump of F, approached from the right or the left.
// Shifted points are evaluated from the unshifted jump to avoid rounding a
// jump location across itself.
bool levy_holds(const Cdf& f, const Cdf& g, double h) {
  double lower_gap = 0.0;
  double upper_gap = 0.0;
  for (double x : g.jumps()) {
    lower_gap = std::max({lower_gap, f(x - h) - g(x),
                          f.left_limit(x - h) - g.left_limit(x)});
    upper_gap = std::max({upper_gap, g(x) - f(x + h),
                          g.left_limit(x) - f.left_limit(x + h)});
  }
  for (double y : f.jumps()) {
    lower_gap = std::max({lower_gap, f(y) - g(y + h),
                          f.left_limit(y) - g.left_limit(y + h)});
    upper_gap = std::max({upper_gap, g(y - h) - f(y),
                          g.left_limit(y - h) - f.left_limit(y)});
  }
  return lower_gap <= h && upper_gap <= h;
}

}  // namespace

double ks_distance(const Cdf& f, const Cdf& g) {
  require_step(f, g);
  double d = 0.0;
  auto visit = [&](double x) {
    d = std::max({d, std::abs(f(x) - g(x)),
                  std::abs(f.left_limit(x) - g.left_limit(x))});
  };
  for (double x : f.jumps()) visit(x);
  for (double x : g.jumps()) visit(x);
  return d;
}

double levy_distance(const Cdf& f, const Cdf& g, double tolerance) {
  require_step(f, g);
  if (levy_holds(f, g, 0.0)) return 0.0;
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (levy_holds(f, g, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double levy_bound_statistic(const SymmetricTridiagonal& j,
                            const SymmetricTridiagonal& d) {
  if (j.size() != d.size()) {
    throw DimensionError("levy_bound_statistic: dimension mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const double diff = j.diag()[i] - d.diag()[i];
    s += diff * diff;
  }
  for (std::size_t i = 0; i < j.offdiag().size(); ++i) {
    const double diff = j.offdiag()[i] - d.offdiag()[i];
    s += 2.0 * diff * diff;
  }
  return s / static_cast<double>(j.size());
}

double ks_pvalue(double distance, std::size_t n) {
  const double sn = std::sqrt(static_cast<double>(n));
  const double lambda = (sn + 0.12 + 0.11 / sn) * distance;
  if (lambda <= 0.0) return 1.0;
  if (lambda < 1.18) {
    // Jacobi theta form of the CDF converges fast for small lambda.
    const double pi2 = std::numbers::pi * std::numbers::pi;
    double cdf = 0.0;
    for (int k = 1; k <= 20; ++k) {
      const double odd = 2.0 * k - 1.0;
      cdf += std::exp(-odd * odd * pi2 / (8.0 * lambda * lambda));
    }
    cdf *= std::sqrt(2.0 * std::numbers::pi) / lambda;
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  double sf = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sf += (k % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-300) break;
  }
  return std::clamp(sf, 0.0, 1.0);
}

double chi_square_sf(double statistic, double dof) {
  if (statistic <= 0.0) return 1.0;
  return boost::math::gamma_q(0.5 * dof, 0.5 * statistic);
}

double GammaMatrix::prefactor_value() const {
  const double md = static_cast<double>(m);
  return prefactor == GammaPrefactor::kPaper ? 2.0 / md : 4.0 / (md * md);
}

Eigen::MatrixXd GammaMatrix::covariance() const {
  return prefactor_value() * gamma_raw;
}

GammaMatrix gamma_matrix(std::size_t m, GammaPrefactor prefactor) {
  if (m == 0) throw DimensionError("gamma_matrix: m must be >= 1");
  const std::vector<double> x = chebyshev_roots(m);
  // T[k][j] = T_j(x_{k+1,m}) for j = 0..m, T_0 = 1.
  std::vector<std::vector<double>> T(m, std::vector<double>(m + 1));
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j <= m; ++j) T[k][j] = chebyshev_T(j, x[k]);
  }
  const auto mi = static_cast<Eigen::Index>(m);
  GammaMatrix out;
  out.m = m;
  out.prefactor = prefactor;
  out.gamma_raw.resize(mi, mi);
  for (std::size_t k = 0; k < m; ++k) {
    const auto& a = T[k];
    for (std::size_t l = 0; l < m; ++l) {
      const auto& b = T[l];
      double g = 0.25;
      for (std::size_t j = 2; j <= m; ++j) {
        g += 0.5 * a[j - 1] * a[j - 1] * b[j - 1] * b[j - 1];
      }
      for (std::size_t j = 1; j + 1 <= m; ++j) {
        g -= 0.25 * (a[j - 1] * a[j - 1] * b[j] * b[j] +
                     b[j - 1] * b[j - 1] * a[j] * a[j]);
      }
      g += 0.25 * a[1] * b[1];
      for (std::size_t j = 2; j + 1 <= m; ++j) {
        g += 0.5 * a[j - 1] * a[j] * b[j - 1] * b[j];
      }
      for (std::size_t j = 1; j + 2 <= m; ++j) {
        g -= 0.25 * (a[j - 1] * a[j] * b[j] * b[j + 1] +
                     b[j - 1] * b[j] * a[j] * a[j + 1]);
      }
      out.gamma_raw(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) = g;
    }
  }
  return out;
}

namespace {

// Tridiagonal matrix with the given diagonal, a distinct first
// off-diagonal entry, and a constant remaining off-diagonal.
Eigen::MatrixXd banded(std::size_t n, double first_diag, double diag,
                       double first_off, double off) {
  const auto ni = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(ni, ni);
  for (Eigen::Index i = 0; i < ni; ++i) a(i, i) = i == 0 ? first_diag : diag;
  for (Eigen::Index i = 0; i + 1 < ni; ++i) {
    a(i, i + 1) = a(i + 1, i) = i == 0 ? first_off : off;
  }
  return a;
}

}  // namespace

Eigen::MatrixXd diagonal_limit_covariance(std::size_t m) {
  return banded(m, 1.0, 0.5, -0.5, -0.25);
}

Eigen::MatrixXd offdiagonal_limit_covariance(std::size_t m) {
  if (m < 2) return Eigen::MatrixXd(0, 0);
  return banded(m - 1, 0.125, 0.125, -1.0 / (8.0 * std::numbers::sqrt2),
                -1.0 / 16.0);
}

Eigen::MatrixXd quadratic_form_covariance(std::size_t m) {
  if (m == 0) throw DimensionError("quadratic_form_covariance: m must be >= 1");
  const Eigen::MatrixXd cm = diagonal_limit_covariance(m);
  const Eigen::MatrixXd cn = offdiagonal_limit_covariance(m);
  const auto mi = static_cast<Eigen::Index>(m);
  // t^T S t = sum_i t_i^2 M_i + 2 sum_i t_i t_{i+1} N_i
  Eigen::MatrixXd sq(mi, mi), adj(mi, std::max<Eigen::Index>(mi - 1, 0));
  for (std::size_t k = 1; k <= m; ++k) {
    const std::vector<double> t = chebyshev_eigvec(m, k);
    const auto r = static_cast<Eigen::Index>(k - 1);
    for (std::size_t i = 0; i < m; ++i) {
      sq(r, static_cast<Eigen::Index>(i)) = t[i] * t[i];
    }
    for (std::size_t i = 0; i + 1 < m; ++i) {
      adj(r, static_cast<Eigen::Index>(i)) = 2.0 * t[i] * t[i + 1];
    }
  }
  Eigen::MatrixXd cov = sq * cm * sq.transpose();
  if (m >= 2) cov += adj * cn * adj.transpose();
  return cov;
}

IntermediateCovariances intermediate_covariances(std::size_t m) {
  if (m < 2) throw DimensionError("intermediate_covariances: m must be >= 2");
  IntermediateCovariances out;
  out.a = diagonal_limit_covariance(2 * m - 1);
  const auto mi = static_cast<Eigen::Index>(m);
  const auto n = static_cast<Eigen::Index>(2 * m - 1);
  out.v = Eigen::MatrixXd::Zero(n, n);
  out.v.topLeftCorner(mi, mi) = diagonal_limit_covariance(m);
  out.v.bottomRightCorner(mi - 1, mi - 1) = offdiagonal_limit_covariance(m);
  return out;
}

CovarianceEstimate covariance_estimate(
    std::span<const std::vector<double>> samples) {
  if (samples.size() < 2) {
    throw DomainError("covariance_estimate needs at least 2 samples");
  }
  const std::size_t dim = samples.front().size();
  const auto d = static_cast<Eigen::Index>(dim);
  CovarianceEstimate est;
  est.count = samples.size();
  est.mean = Eigen::VectorXd::Zero(d);
  for (const auto& s : samples) {
    if (s.size() != dim) {
      throw DimensionError("covariance_estimate: samples differ in dimension");
    }
    est.mean += Eigen::Map<const Eigen::VectorXd>(s.data(), d);
  }
  est.mean /= static_cast<double>(samples.size());
  est.cov = Eigen::MatrixXd::Zero(d, d);
  for (const auto& s : samples) {
    const Eigen::VectorXd c =
        Eigen::Map<const Eigen::VectorXd>(s.data(), d) - est.mean;
    est.cov.noalias() += c * c.transpose();
  }
  est.cov /= static_cast<double>(samples.size() - 1);
  return est;
}

}  // namespace momentlab
