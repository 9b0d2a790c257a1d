#include "momentlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "momentlab/errors.hpp"

namespace momentlab {
namespace {

// Implicit-shift QL on a symmetric tridiagonal matrix (d, e) with
// e[i] coupling i and i+1. When `first_row` is non-null it holds the first
// row of the accumulated eigenvector matrix (initially e_1) and receives the
// same Givens rotations, which is all Gauss weights need.
void implicit_ql(std::vector<double>& d, std::vector<double> e,
                 std::vector<double>* first_row) {
  const std::size_t n = d.size();
  e.push_back(0.0);
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) {
          break;
        }
      }
      if (m != l) {
        if (iter++ == kMaxQLSweeps) {
          throw ConvergenceError("implicit QL did not converge for eigenvalue " +
                                 std::to_string(l) + " within " +
                                 std::to_string(kMaxQLSweeps) + " sweeps");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        std::size_t i = m;
        bool underflow = false;
        while (i-- > l) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (first_row != nullptr) {
            auto& z = *first_row;
            f = z[i + 1];
            z[i + 1] = s * z[i] + c * f;
            z[i] = c * z[i] - s * f;
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

std::vector<double> bisection_eigenvalues(const SymmetricTridiagonal& t) {
  const auto& d = t.diag();
  const auto& e = t.offdiag();
  const std::size_t n = t.size();
  // Gershgorin interval.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(e[i - 1]);
    if (i + 1 < n) r += std::abs(e[i]);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  const double scale = std::max(std::abs(lo), std::abs(hi));
  const double pad = 2.0 * std::numeric_limits<double>::epsilon() * scale +
                     std::numeric_limits<double>::min();
  lo -= pad;
  hi += pad;

  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    // k-th smallest eigenvalue: smallest x with sturm_count(x) > k.
    double a = lo;
    double b = hi;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (sturm_count(t, mid) > k) {
        b = mid;
      } else {
        a = mid;
      }
    }
    out[k] = 0.5 * (a + b);
    lo = a;  // eigenvalues are ascending
  }
  return out;
}

}  // namespace

std::size_t sturm_count(const SymmetricTridiagonal& t, double x) {
  const auto& d = t.diag();
  const auto& e = t.offdiag();
  const double tiny = std::numeric_limits<double>::min();
  std::size_t count = 0;
  double q = d[0] - x;
  for (std::size_t i = 0;; ++i) {
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
    if (i + 1 == d.size()) break;
    q = d[i + 1] - x - e[i] * e[i] / q;
  }
  return count;
}

Spectrum eigenvalues(const SymmetricTridiagonal& t, EigenMethod method) {
  if (method == EigenMethod::kBisection) {
    return Spectrum{bisection_eigenvalues(t)};
  }
  std::vector<double> d = t.diag();
  implicit_ql(d, t.offdiag(), nullptr);
  std::sort(d.begin(), d.end());
  return Spectrum{std::move(d)};
}

PrincipalRepresentation principal_representation(
    const SymmetricTridiagonal& t) {
  for (std::size_t i = 0; i < t.offdiag().size(); ++i) {
    if (!(t.offdiag()[i] > 0.0)) {
      throw DomainError("principal_representation: off-diagonal entry " +
                        std::to_string(i + 1) + " is not strictly positive");
    }
  }
  const std::size_t n = t.size();
  std::vector<double> d = t.diag();
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;
  implicit_ql(d, t.offdiag(), &z);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&d](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  PrincipalRepresentation rep;
  rep.support.reserve(n);
  rep.weights.reserve(n);
  for (std::size_t i : order) {
    rep.support.push_back(d[i]);
    rep.weights.push_back(z[i] * z[i]);
  }
  return rep;
}

MomentVector spectral_moments(const SymmetricTridiagonal& t, std::size_t k) {
  if (k == 0) throw DimensionError("spectral_moments: k must be >= 1");
  const PrincipalRepresentation rep = principal_representation(t);
  std::vector<double> c(k, 0.0);
  for (std::size_t i = 0; i < rep.support.size(); ++i) {
    double power = rep.weights[i];
    for (std::size_t j = 0; j < k; ++j) {
      power *= rep.support[i];
      c[j] += power;
    }
  }
  return MomentVector{std::move(c)};
}

}  // namespace momentlab
