#pragma once

#include <cstddef>
#include <vector>

namespace momentlab {

/// Canonical moments in [eps, 1 - eps] count as interior points.
inline constexpr double kInteriorTolerance = 1e-10;

/// Ordinary moments (c_1, ..., c_k) of a probability measure on [0, 1].
/// c_0 = 1 is implicit and never stored.
struct MomentVector {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
};

/// Canonical moments (p_1, ..., p_k); p_j is the relative position of c_j
/// inside its feasible range given c_1, ..., c_{j-1}.
struct CanonicalVector {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
};

/// zeta_1 = p_1, zeta_j = (1 - p_{j-1}) p_j. These parametrize the
/// three-term recurrence of the monic orthogonal polynomials.
struct ZetaVector {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
};

}  // namespace momentlab
