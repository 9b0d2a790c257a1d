#include "momentlab/orthopoly.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "momentlab/errors.hpp"

namespace momentlab {
namespace {

// Hankel determinants of [0, 1] moments shrink like 2^{-2m^2} while the
// expansion terms stay O(1), so the oracle expands in 50 decimal digits.
using Real = boost::multiprecision::cpp_bin_float_50;
using Square = std::vector<std::vector<Real>>;

// Laplace expansion along the first row.
Real cofactor_determinant(const Square& a) {
  const std::size_t n = a.size();
  if (n == 0) return Real(1);
  if (n == 1) return a[0][0];
  if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
  Real det = 0;
  Square minor(n - 1, std::vector<Real>(n - 1));
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t dst = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == col) continue;
        minor[i - 1][dst++] = a[i][j];
      }
    }
    const Real term = a[0][col] * cofactor_determinant(minor);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

}  // namespace

double MonicPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

MonicPolynomial monic_from_zeta(const ZetaVector& z, std::size_t m) {
  if (m == 0) return MonicPolynomial{{1.0}};
  if (z.size() + 1 < 2 * m) {
    throw DimensionError("degree " + std::to_string(m) + " needs " +
                         std::to_string(2 * m - 1) + " zeta coefficients, got " +
                         std::to_string(z.size()));
  }
  auto zeta = [&z](std::size_t j) { return j == 0 ? 0.0 : z[j - 1]; };
  std::vector<double> prev{1.0};
  std::vector<double> cur{-zeta(1), 1.0};
  for (std::size_t j = 1; j < m; ++j) {
    const double a = zeta(2 * j) + zeta(2 * j + 1);
    const double b = zeta(2 * j - 1) * zeta(2 * j);
    std::vector<double> next(j + 2, 0.0);
    for (std::size_t i = 0; i <= j; ++i) {
      next[i + 1] += cur[i];
      next[i] -= a * cur[i];
    }
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= b * prev[i];
    next[j + 1] = 1.0;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return MonicPolynomial{std::move(cur)};
}

MonicPolynomial hankel_polynomial(const MomentVector& c, std::size_t m) {
  if (m == 0) return MonicPolynomial{{1.0}};
  if (m > 8) throw DomainError("hankel_polynomial is limited to degree <= 8");
  if (c.size() + 1 < 2 * m) {
    throw DimensionError("degree " + std::to_string(m) + " needs " +
                         std::to_string(2 * m - 1) + " moments");
  }
  auto mom = [&c](std::size_t j) { return Real(j == 0 ? 1.0 : c[j - 1]); };

  Square hankel(m, std::vector<Real>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) hankel[i][j] = mom(i + j);
  }
  const Real denom = cofactor_determinant(hankel);
  if (!(denom > 0)) {
    throw NonInteriorError(2 * m - 2,
                           "Hankel determinant is not positive; moments are "
                           "not interior");
  }
  // Bordered (m+1) x (m+1) matrix: row i is (c_i, ..., c_{i+m-1}, x^i).
  // Coefficient of x^i is the cofactor of the last-column entry in row i.
  std::vector<double> coeff(m + 1);
  Square minor(m, std::vector<Real>(m));
  for (std::size_t row = 0; row <= m; ++row) {
    std::size_t dst = 0;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == row) continue;
      for (std::size_t j = 0; j < m; ++j) minor[dst][j] = mom(i + j);
      ++dst;
    }
    const Real cof = cofactor_determinant(minor) / denom;
    coeff[row] = static_cast<double>((row + m) % 2 == 0 ? cof : Real(-cof));
  }
  coeff[m] = 1.0;
  return MonicPolynomial{std::move(coeff)};
}

double chebyshev_T(std::size_t j, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("chebyshev_T: x outside [0, 1]");
  }
  const double t = 2.0 * x - 1.0;
  double prev = 1.0;
  if (j == 0) return prev;
  double cur = t;
  for (std::size_t i = 1; i < j; ++i) {
    const double next = 2.0 * t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> chebyshev_roots(std::size_t m) {
  std::vector<double> x(m);
  const double md = static_cast<double>(m);
  for (std::size_t k = 1; k <= m; ++k) {
    const double theta =
        static_cast<double>(2 * k - 1) * std::numbers::pi / (2.0 * md);
    x[k - 1] = (std::cos(theta) + 1.0) / 2.0;
  }
  return x;
}

SymmetricTridiagonal chebyshev_matrix(std::size_t m) {
  if (m == 0) throw DimensionError("chebyshev_matrix: m must be >= 1");
  std::vector<double> diag(m, 0.5);
  std::vector<double> off(m - 1, 0.25);
  if (m >= 2) off[0] = 1.0 / (2.0 * std::numbers::sqrt2);
  return SymmetricTridiagonal(std::move(diag), std::move(off));
}

std::vector<double> chebyshev_eigvec(std::size_t m, std::size_t k) {
  if (k < 1 || k > m) {
    throw DimensionError("chebyshev_eigvec: k must lie in 1..m");
  }
  const double theta = static_cast<double>(2 * k - 1) * std::numbers::pi /
                       (2.0 * static_cast<double>(m));
  std::vector<double> t(m);
  t[0] = 1.0 / std::numbers::sqrt2;
  for (std::size_t i = 1; i < m; ++i) {
    t[i] = std::cos(static_cast<double>(i) * theta);
  }
  return t;
}

ChebyshevGrid chebyshev_grid(std::size_t m) {
  ChebyshevGrid g;
  g.m = m;
  g.roots = chebyshev_roots(m);
  g.eigvecs.reserve(m);
  for (std::size_t k = 1; k <= m; ++k) g.eigvecs.push_back(chebyshev_eigvec(m, k));
  return g;
}

}  // namespace momentlab
