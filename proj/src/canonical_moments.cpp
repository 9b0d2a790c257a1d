#include "momentlab/canonical_moments.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "momentlab/errors.hpp"

namespace momentlab {
namespace {

bool is_interior(double p) {
  return p >= kInteriorTolerance && p <= 1.0 - kInteriorTolerance;
}

// e_1^T J^j e_1 for j = 1..k, using the non-symmetric Jacobi form with
// diagonal a_m = zeta_{2m} + zeta_{2m+1}, superdiagonal 1 and subdiagonal
// b_m = zeta_{2m-1} zeta_{2m}. Entries beyond z.size() are treated as 0;
// they cannot influence c_j for j <= z.size(). No range checks.
std::vector<double> moments_unchecked(const std::vector<double>& z,
                                      std::size_t k) {
  auto zeta = [&z](std::size_t j) -> double {
    return (j >= 1 && j <= z.size()) ? z[j - 1] : 0.0;
  };
  const std::size_t dim = k / 2 + 1;
  std::vector<double> a(dim), b(dim, 0.0);
  for (std::size_t m = 0; m < dim; ++m) {
    a[m] = zeta(2 * m) + zeta(2 * m + 1);
    if (m > 0) b[m] = zeta(2 * m - 1) * zeta(2 * m);
  }
  // v holds the first row of J^j; only entries reachable in the remaining
  // steps are needed, but dim is small so the full vector is kept.
  std::vector<double> v(dim, 0.0), next(dim);
  v[0] = 1.0;
  std::vector<double> c(k);
  for (std::size_t j = 0; j < k; ++j) {
    // row vector times J: (vJ)_i = v_{i-1} * 1 + v_i a_i + v_{i+1} b_{i+1}
    for (std::size_t i = 0; i < dim; ++i) {
      double s = v[i] * a[i];
      if (i > 0) s += v[i - 1];
      if (i + 1 < dim) s += v[i + 1] * b[i + 1];
      next[i] = s;
    }
    v.swap(next);
    c[j] = v[0];
  }
  return c;
}

}  // namespace

ZetaVector canonical_to_zeta(const CanonicalVector& p) {
  std::vector<double> z(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (!is_interior(p[j])) {
      throw BoundaryError(j + 1, "canonical moment p_" + std::to_string(j + 1) +
                                     " is at or outside the boundary");
    }
    z[j] = j == 0 ? p[0] : (1.0 - p[j - 1]) * p[j];
  }
  return ZetaVector{std::move(z)};
}

CanonicalVector zeta_to_canonical(const ZetaVector& z) {
  std::vector<double> p(z.size());
  double q = 1.0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (q <= kInteriorTolerance) {
      throw BoundaryError(j, "q_" + std::to_string(j) +
                                 " is at the boundary; cannot divide");
    }
    p[j] = z[j] / q;
    q = 1.0 - p[j];
  }
  return CanonicalVector{std::move(p)};
}

MomentVector zeta_to_moments(const ZetaVector& z, std::size_t k) {
  if (k > z.size()) {
    throw DimensionError("requested " + std::to_string(k) +
                         " moments from " + std::to_string(z.size()) +
                         " zeta coefficients");
  }
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (!(z[j] >= 0.0 && z[j] <= 1.0)) {
      throw DomainError("zeta_" + std::to_string(j + 1) + " outside [0, 1]");
    }
  }
  return MomentVector{moments_unchecked(z.values, k)};
}

ZetaVector moments_to_zeta(const MomentVector& c) {
  const std::size_t k = c.size();
  std::vector<double> mu(k + 1);
  mu[0] = 1.0;
  for (std::size_t j = 0; j < k; ++j) mu[j + 1] = c[j];

  std::vector<double> z;
  z.reserve(k);
  double q_prev = 1.0;
  // Validates zeta_j through p_j = zeta_j / q_{j-1}.
  auto push = [&](double zeta) {
    const std::size_t j = z.size() + 1;
    const double p = zeta / q_prev;
    if (!std::isfinite(p) || !is_interior(p)) {
      throw NonInteriorError(j, "moment vector is not interior at index " +
                                    std::to_string(j));
    }
    z.push_back(zeta);
    q_prev = 1.0 - p;
  };

  // Modified Chebyshev algorithm with monomial moments:
  //   sigma_{j,l} = sigma_{j-1,l+1} - alpha_{j-1} sigma_{j-1,l}
  //                 - beta_{j-1} sigma_{j-2,l}
  //   alpha_j = sigma_{j,j+1}/sigma_{j,j} - sigma_{j-1,j}/sigma_{j-1,j-1}
  //   beta_j  = sigma_{j,j}/sigma_{j-1,j-1}
  // beta_j needs moments through 2j, alpha_j through 2j + 1.
  std::vector<double> prev2(k + 1, 0.0);  // sigma_{j-2, .}
  std::vector<double> prev(mu);           // sigma_{j-1, .}
  std::vector<double> cur(k + 1, 0.0);
  if (k == 0) return ZetaVector{};
  double alpha = mu[1] / mu[0];
  double beta = mu[0];
  push(alpha);  // zeta_1
  for (std::size_t j = 1; 2 * j <= k; ++j) {
    for (std::size_t l = j; l + j <= k; ++l) {
      cur[l] = prev[l + 1] - alpha * prev[l] - (j >= 2 ? beta * prev2[l] : 0.0);
    }
    const double beta_j = cur[j] / prev[j - 1];
    // zeta_{2j} = beta_j / zeta_{2j-1}
    push(beta_j / z.back());
    if (2 * j + 1 <= k) {
      const double alpha_j = cur[j + 1] / cur[j] - prev[j] / prev[j - 1];
      // zeta_{2j+1} = alpha_j - zeta_{2j}
      push(alpha_j - z.back());
      alpha = alpha_j;
    }
    beta = beta_j;
    prev2.swap(prev);
    prev.swap(cur);
  }
  return ZetaVector{std::move(z)};
}

CanonicalVector moments_to_canonical(const MomentVector& c) {
  return zeta_to_canonical(moments_to_zeta(c));
}

MomentVector canonical_to_moments(const CanonicalVector& p) {
  return zeta_to_moments(canonical_to_zeta(p), p.size());
}

double range_width(const CanonicalVector& prefix) {
  double r = 1.0;
  for (double p : prefix.values) r *= p * (1.0 - p);
  return r;
}

MomentRange moment_range(const MomentVector& prefix) {
  if (prefix.size() == 0) return {0.0, 1.0};
  const CanonicalVector p = moments_to_canonical(prefix);
  // c_k is affine in p_k: p_k = 0 gives c_k^-, p_k = 1 gives c_k^+.
  std::vector<double> z = canonical_to_zeta(p).values;
  const double q_last = 1.0 - p.values.back();
  const std::size_t k = prefix.size() + 1;
  z.push_back(0.0);
  const double lower = moments_unchecked(z, k).back();
  z.back() = q_last;
  const double upper = moments_unchecked(z, k).back();
  return {lower, upper};
}

double arcsine_moment(std::size_t k) {
  // binom(2k, k) / 4^k = prod_{i=1}^{k} (2i - 1) / (2i)
  double c = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    c *= static_cast<double>(2 * i - 1) / static_cast<double>(2 * i);
  }
  return c;
}

Eigen::MatrixXd sigma_matrix(std::size_t k) {
  const auto n = static_cast<Eigen::Index>(k);
  Eigen::MatrixXd s(n, n);
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = 1; j <= k; ++j) {
      s(i - 1, j - 1) = 0.5 * (arcsine_moment(i + j) -
                               arcsine_moment(i) * arcsine_moment(j));
    }
  }
  return s;
}

double log_moment_space_volume(std::size_t n) {
  double acc = 0.0;
  for (std::size_t j = 1; j <= n; ++j) {
    const double x = static_cast<double>(j);
    acc += 2.0 * std::lgamma(x) - std::lgamma(2.0 * x);
  }
  return acc;
}

double moment_space_volume(std::size_t n) {
  return std::exp(log_moment_space_volume(n));
}

}  // namespace momentlab
