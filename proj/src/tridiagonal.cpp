#include "momentlab/tridiagonal.hpp"

#include <numeric>
#include <string>

#include "momentlab/errors.hpp"

namespace momentlab {

SymmetricTridiagonal::SymmetricTridiagonal(std::vector<double> diag,
                                           std::vector<double> offdiag)
    : diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
  if (diag_.empty()) {
    throw DimensionError("tridiagonal matrix must have dimension >= 1");
  }
  if (offdiag_.size() + 1 != diag_.size()) {
    throw DimensionError("off-diagonal length " +
                         std::to_string(offdiag_.size()) +
                         " does not match dimension " +
                         std::to_string(diag_.size()));
  }
}

double SymmetricTridiagonal::trace() const {
  return std::accumulate(diag_.begin(), diag_.end(), 0.0);
}

double SymmetricTridiagonal::frobenius_squared() const {
  double s = 0.0;
  for (double d : diag_) s += d * d;
  for (double e : offdiag_) s += 2.0 * e * e;
  return s;
}

SymmetricTridiagonal SymmetricTridiagonal::leading(std::size_t m) const {
  if (m == 0 || m > size()) {
    throw DimensionError("leading block size out of range");
  }
  return SymmetricTridiagonal(
      std::vector<double>(diag_.begin(), diag_.begin() + m),
      std::vector<double>(offdiag_.begin(), offdiag_.begin() + (m - 1)));
}

Eigen::MatrixXd SymmetricTridiagonal::to_dense() const {
  const auto n = static_cast<Eigen::Index>(size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) a(i, i) = diag_[i];
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    a(i, i + 1) = offdiag_[i];
    a(i + 1, i) = offdiag_[i];
  }
  return a;
}

}  // namespace momentlab
