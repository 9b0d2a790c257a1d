#include "momentlab/ensemble.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "momentlab/canonical_moments.hpp"
#include "momentlab/errors.hpp"
#include "momentlab/random.hpp"

namespace momentlab {
namespace {

double beta_log_density(double a, double x) {
  if (!(x > 0.0 && x < 1.0)) return -std::numeric_limits<double>::infinity();
  const double log_beta = 2.0 * std::lgamma(a) - std::lgamma(2.0 * a);
  return (a - 1.0) * std::log(x * (1.0 - x)) - log_beta;
}

}  // namespace

double CanonicalSample::alpha(long j) const {
  if (j == -1) return -1.0;
  if (j < -1 || static_cast<std::size_t>(j) >= p.size()) {
    throw DimensionError("alpha index " + std::to_string(j) + " out of range");
  }
  return 2.0 * p[static_cast<std::size_t>(j)] - 1.0;
}

ZetaVector CanonicalSample::zeta() const { return canonical_to_zeta(p); }

CanonicalSample sample_canonical_prefix(const EnsembleSpec& spec,
                                        std::size_t length) {
  if (spec.n == 0) throw DomainError("ensemble order n must be >= 1");
  if (length > 2 * spec.n - 1) {
    throw DimensionError("prefix length exceeds 2n - 1");
  }
  Rng rng(spec.seed, spec.replicate);
  std::vector<double> p(length);
  for (std::size_t j = 1; j <= length; ++j) {
    p[j - 1] = sample_beta_symmetric(static_cast<double>(2 * spec.n - j), rng);
  }
  return CanonicalSample{spec.n, CanonicalVector{std::move(p)}};
}

CanonicalSample sample_canonical(const EnsembleSpec& spec) {
  return sample_canonical_prefix(spec, 2 * spec.n - 1);
}

SymmetricTridiagonal build_jacobi(const CanonicalSample& s, std::size_t m) {
  if (m == 0 || m > s.n || 2 * m - 1 > s.p.size()) {
    throw DimensionError("build_jacobi: m = " + std::to_string(m) +
                         " out of range for the sample");
  }
  const ZetaVector z = canonical_to_zeta(
      CanonicalVector{{s.p.values.begin(), s.p.values.begin() + (2 * m - 1)}});
  auto xi = [&z](std::size_t j) { return z[j - 1]; };
  std::vector<double> diag(m), off(m - 1);
  diag[0] = xi(1);
  for (std::size_t k = 2; k <= m; ++k) diag[k - 1] = xi(2 * k - 2) + xi(2 * k - 1);
  for (std::size_t k = 1; k < m; ++k) {
    off[k - 1] = std::sqrt(xi(2 * k - 1) * xi(2 * k));
  }
  return SymmetricTridiagonal(std::move(diag), std::move(off));
}

SymmetricTridiagonal build_killip_nenciu(const CanonicalSample& s) {
  const std::size_t n = s.n;
  if (s.p.size() != 2 * n - 1) {
    throw DimensionError("build_killip_nenciu needs a full sample");
  }
  auto alpha = [&s](long j) { return s.alpha(j); };
  std::vector<double> b(n), a(n - 1);
  for (long k = 0; k < static_cast<long>(n); ++k) {
    // alpha_{-2} only appears multiplied by 1 + alpha_{-1} = 0.
    const double tail =
        k == 0 ? 0.0 : (1.0 + alpha(2 * k - 1)) * alpha(2 * k - 2);
    b[k] = (1.0 - alpha(2 * k - 1)) * alpha(2 * k) - tail;
  }
  for (long k = 0; k + 1 < static_cast<long>(n); ++k) {
    const double a2 = alpha(2 * k);
    a[k] = std::sqrt((1.0 - alpha(2 * k - 1)) * (1.0 - a2 * a2) *
                     (1.0 + alpha(2 * k + 1)));
  }
  return SymmetricTridiagonal(std::move(b), std::move(a));
}

double max_affine_deviation(const SymmetricTridiagonal& killip_nenciu,
                            const SymmetricTridiagonal& jacobi) {
  if (killip_nenciu.size() != jacobi.size()) {
    throw DimensionError("max_affine_deviation: dimension mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < jacobi.size(); ++i) {
    worst = std::max(worst, std::abs(killip_nenciu.diag()[i] -
                                     (4.0 * jacobi.diag()[i] - 2.0)));
  }
  for (std::size_t i = 0; i < jacobi.offdiag().size(); ++i) {
    worst = std::max(worst, std::abs(killip_nenciu.offdiag()[i] -
                                     4.0 * jacobi.offdiag()[i]));
  }
  return worst;
}

double log_root_density_constant(std::size_t n) {
  const double nd = static_cast<double>(n);
  double acc = -std::lgamma(nd + 1.0);
  for (std::size_t r = 0; r < n; ++r) {
    const double rd = static_cast<double>(r);
    acc += std::lgamma(2.0 * rd + 2.0 * nd) - 2.0 * std::lgamma(2.0 * rd + 1.0) -
           std::lgamma(2.0 * rd + 2.0);
  }
  return acc;
}

double joint_root_log_density(const std::vector<double>& x, std::size_t n) {
  if (x.size() != n) {
    throw DimensionError("joint_root_log_density: expected " +
                         std::to_string(n) + " coordinates");
  }
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  for (double xi : x) {
    if (!(xi >= 0.0 && xi <= 1.0)) return kNegInf;
  }
  double acc = log_root_density_constant(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::abs(x[i] - x[j]);
      if (d == 0.0) return kNegInf;
      acc += 4.0 * std::log(d);
    }
  }
  return acc;
}

double canonical_log_density(const CanonicalVector& p, std::size_t n) {
  if (n == 0 || p.size() != 2 * n - 1) {
    throw DimensionError("canonical_log_density: expected length 2n - 1");
  }
  double acc = 0.0;
  for (std::size_t j = 1; j <= p.size(); ++j) {
    acc += beta_log_density(static_cast<double>(2 * n - j), p[j - 1]);
  }
  return acc;
}

}  // namespace momentlab
