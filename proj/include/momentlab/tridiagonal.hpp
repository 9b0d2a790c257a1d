#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace momentlab {

/// Real symmetric tridiagonal matrix stored as its diagonal and first
/// off-diagonal.
class SymmetricTridiagonal {
 public:
  SymmetricTridiagonal() = default;
  SymmetricTridiagonal(std::vector<double> diag, std::vector<double> offdiag);

  std::size_t size() const noexcept { return diag_.size(); }
  const std::vector<double>& diag() const noexcept { return diag_; }
  const std::vector<double>& offdiag() const noexcept { return offdiag_; }
  std::vector<double>& diag() noexcept { return diag_; }
  std::vector<double>& offdiag() noexcept { return offdiag_; }

  double trace() const;
  /// Squared Frobenius norm, sum of diag^2 + 2 sum of offdiag^2.
  double frobenius_squared() const;
  /// Leading principal m x m block.
  SymmetricTridiagonal leading(std::size_t m) const;
  Eigen::MatrixXd to_dense() const;

 private:
  std::vector<double> diag_;
  std::vector<double> offdiag_;
};

}  // namespace momentlab
