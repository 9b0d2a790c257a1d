#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "momentlab/canonical_moments.hpp"
#include "momentlab/errors.hpp"
#include "oracles.hpp"

using namespace momentlab;

namespace {

std::vector<double> ones_half(std::size_t n) { return std::vector<double>(n, 0.5); }

// c_3 bounds from the classical closed forms:
//   c3- = c2^2 / c1,  c3+ = c2 - (c1 - c2)^2 / (1 - c1).
std::pair<double, double> third_moment_range(double c1, double c2) {
  return {c2 * c2 / c1, c2 - (c1 - c2) * (c1 - c2) / (1.0 - c1)};
}

}  // namespace

TEST(CanonicalToZeta, Examples) {
  EXPECT_EQ(canonical_to_zeta(CanonicalVector{ones_half(3)}).values,
            (std::vector<double>{0.5, 0.25, 0.25}));
  EXPECT_EQ(canonical_to_zeta(CanonicalVector{{0.37}}).values,
            (std::vector<double>{0.37}));
  const auto z = canonical_to_zeta(CanonicalVector{{0.3, 0.6}});
  EXPECT_DOUBLE_EQ(z[0], 0.3);
  EXPECT_NEAR(z[1], 0.42, 1e-15);
}

TEST(CanonicalToZeta, RejectsBoundaryWithIndex) {
  try {
    canonical_to_zeta(CanonicalVector{{0.5, 1.0, 0.5}});
    FAIL() << "expected BoundaryError";
  } catch (const BoundaryError& e) {
    EXPECT_EQ(e.index(), 2u);
  }
  EXPECT_THROW(canonical_to_zeta(CanonicalVector{{0.0}}), BoundaryError);
  EXPECT_THROW(canonical_to_zeta(CanonicalVector{{0.5, 5e-11}}), BoundaryError);
  EXPECT_NO_THROW(canonical_to_zeta(CanonicalVector{{0.5, 2e-10}}));
}

TEST(ZetaToCanonical, Examples) {
  EXPECT_EQ(zeta_to_canonical(ZetaVector{{0.5, 0.25, 0.25}}).values, ones_half(3));
  const auto p = zeta_to_canonical(ZetaVector{{0.3, 0.42}});
  EXPECT_DOUBLE_EQ(p[0], 0.3);
  EXPECT_NEAR(p[1], 0.6, 1e-15);
}

TEST(ZetaToCanonical, RejectsVanishingDivisor) {
  EXPECT_THROW(zeta_to_canonical(ZetaVector{{1.0, 0.3}}), BoundaryError);
}

// The error in p_{j-1} is amplified by p_j / q_{j-1} at every step, so the
// 1e-12 level holds up to about length 8 for p in [0.1, 0.9].
TEST(ZetaToCanonical, RoundTripShortVectors) {
  Rng rng(101);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t len = 1 + static_cast<std::size_t>(t % 8);
    const CanonicalVector p{oracle::random_interior(rng, len)};
    const auto back = zeta_to_canonical(canonical_to_zeta(p));
    for (std::size_t i = 0; i < len; ++i) worst = std::max(worst, std::abs(back[i] - p[i]));
  }
  EXPECT_LT(worst, 1e-12);
}

TEST(ZetaToMoments, Examples) {
  const auto c = zeta_to_moments(ZetaVector{{0.5, 0.25, 0.25}}, 3);
  EXPECT_NEAR(c[0], 0.5, 1e-15);
  EXPECT_NEAR(c[1], 0.375, 1e-15);
  EXPECT_NEAR(c[2], 0.3125, 1e-15);
  EXPECT_DOUBLE_EQ(zeta_to_moments(ZetaVector{{0.81}}, 1)[0], 0.81);
  EXPECT_EQ(zeta_to_moments(ZetaVector{{0.5, 0.25}}, 0).size(), 0u);
}

TEST(ZetaToMoments, Errors) {
  EXPECT_THROW(zeta_to_moments(ZetaVector{{0.5, 0.25}}, 3), DimensionError);
  EXPECT_THROW(zeta_to_moments(ZetaVector{{0.5, 1.5}}, 2), DomainError);
  EXPECT_THROW(zeta_to_moments(ZetaVector{{-0.1}}, 1), DomainError);
}

// Point masses: zeta = (x, 0) gives c_j = x^j for j <= 2.
TEST(ZetaToMoments, PointMassAndTwoPoint) {
  const auto c = zeta_to_moments(ZetaVector{{0.3, 0.0}}, 2);
  EXPECT_NEAR(c[1], 0.09, 1e-16);
  // Bernoulli(1/2) on {0, 1}: p = (1/2, 1) so zeta = (1/2, 1/2, 0).
  const auto b = zeta_to_moments(ZetaVector{{0.5, 0.5, 0.0}}, 3);
  for (double v : b.values) EXPECT_NEAR(v, 0.5, 1e-16);
}

TEST(ZetaToMoments, RoundTripLengthSeven) {
  Rng rng(102);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const ZetaVector z = canonical_to_zeta(CanonicalVector{oracle::random_interior(rng, 7)});
    const MomentVector c = zeta_to_moments(z, 7);
    const ZetaVector back = moments_to_zeta(c);
    for (std::size_t i = 0; i < 7; ++i) worst = std::max(worst, std::abs(back[i] - z[i]));
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(ZetaToMoments, MomentsLieInsideTheirRanges) {
  Rng rng(103);
  for (int t = 0; t < 100; ++t) {
    const CanonicalVector p{oracle::random_interior(rng, 8)};
    const auto c = canonical_to_moments(p);
    EXPECT_TRUE(oracle::in_moment_space(c.values));
    for (std::size_t k = 1; k < 6; ++k) {
      const MomentVector prefix{std::vector<double>(c.values.begin(), c.values.begin() + k)};
      const auto r = moment_range(prefix);
      EXPECT_LT(r.lower, c[k]);
      EXPECT_GT(r.upper, c[k]);
    }
  }
}

TEST(MomentsToZeta, Examples) {
  const auto z = moments_to_zeta(MomentVector{{0.5, 0.375, 0.3125}});
  EXPECT_NEAR(z[0], 0.5, 1e-15);
  EXPECT_NEAR(z[1], 0.25, 1e-15);
  EXPECT_NEAR(z[2], 0.25, 1e-15);
  EXPECT_DOUBLE_EQ(moments_to_zeta(MomentVector{{0.2}})[0], 0.2);
  // p_2 = (5/16 - 1/4) / (1/2 - 1/4) = 1/4 and q_1 = 1/2.
  EXPECT_NEAR(moments_to_zeta(MomentVector{{0.5, 0.3125}})[1], 0.125, 1e-15);
}

TEST(MomentsToZeta, NonInteriorReportsFirstIndex) {
  auto index_of = [](std::vector<double> c) -> std::size_t {
    try {
      moments_to_zeta(MomentVector{std::move(c)});
    } catch (const NonInteriorError& e) {
      return e.index();
    }
    return 0;
  };
  EXPECT_EQ(index_of({0.5, 0.25}), 2u);         // c_2 = c_1^2, lower boundary
  EXPECT_EQ(index_of({0.5, 0.6}), 2u);          // above c_2^+ = c_1
  EXPECT_EQ(index_of({1.2}), 1u);
  EXPECT_EQ(index_of({0.5, 0.375, 0.35}), 3u);  // c_3^+ = 11/32
  EXPECT_EQ(index_of({0.0, 0.1}), 1u);
}

TEST(MomentsToCanonical, Examples) {
  const auto p = moments_to_canonical(MomentVector{{0.5, 0.375, 0.3125}});
  for (double v : p.values) EXPECT_NEAR(v, 0.5, 1e-15);
  EXPECT_DOUBLE_EQ(moments_to_canonical(MomentVector{{0.7}})[0], 0.7);
}

TEST(MomentsToCanonical, RoundTripLengthNine) {
  Rng rng(104);
  double worst = 0.0;
  for (int t = 0; t < 500; ++t) {
    const CanonicalVector p{oracle::random_interior(rng, 9)};
    const auto back = moments_to_canonical(canonical_to_moments(p));
    for (std::size_t i = 0; i < 9; ++i) worst = std::max(worst, std::abs(back[i] - p[i]));
  }
  EXPECT_LT(worst, 1e-8);
}

TEST(MomentsToCanonical, MomentsRoundTripLengthFifteen) {
  Rng rng(105);
  double worst = 0.0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t len = 1 + static_cast<std::size_t>(t % 15);
    const auto c = canonical_to_moments(CanonicalVector{oracle::random_interior(rng, len)});
    const auto back = canonical_to_moments(moments_to_canonical(c));
    for (std::size_t i = 0; i < len; ++i) worst = std::max(worst, std::abs(back[i] - c[i]));
  }
  EXPECT_LT(worst, 1e-8);
}

TEST(MomentsToCanonical, AgreesWithClosedFormRanges) {
  Rng rng(106);
  for (int t = 0; t < 200; ++t) {
    const CanonicalVector p{oracle::random_interior(rng, 3)};
    const auto c = canonical_to_moments(p);
    const double p2 = (c[1] - c[0] * c[0]) / (c[0] - c[0] * c[0]);
    const auto [lo, hi] = third_moment_range(c[0], c[1]);
    const double p3 = (c[2] - lo) / (hi - lo);
    const auto q = moments_to_canonical(c);
    EXPECT_NEAR(q[0], c[0], 1e-14);
    EXPECT_NEAR(q[1], p2, 1e-12);
    EXPECT_NEAR(q[2], p3, 1e-10);
  }
}

TEST(MomentRange, Examples) {
  const auto empty = moment_range(MomentVector{});
  EXPECT_EQ(empty.lower, 0.0);
  EXPECT_EQ(empty.upper, 1.0);
  const auto r = moment_range(MomentVector{{0.5}});
  EXPECT_NEAR(r.lower, 0.25, 1e-15);
  EXPECT_NEAR(r.upper, 0.5, 1e-15);
  EXPECT_NEAR(moment_range(MomentVector{{0.5, 0.375}}).width(), 1.0 / 16.0, 1e-15);
}

// Brute force over two-point measures w delta_a + (1 - w) delta_b with
// mean c1. Extremes of c_2 over [0, 1] measures are attained by such
// measures (a point mass for the minimum, {0, 1} for the maximum).
TEST(MomentRange, TwoPointBruteForce) {
  for (double c1 : {0.1, 0.35, 0.5, 0.8}) {
    double lo = 1.0, hi = 0.0;
    const int grid = 400;
    for (int i = 0; i <= grid; ++i) {
      const double a = c1 * i / grid;
      for (int j = 0; j <= grid; ++j) {
        const double b = c1 + (1.0 - c1) * j / grid;
        if (b - a < 1e-12) {
          lo = std::min(lo, c1 * c1);
          continue;
        }
        const double w = (b - c1) / (b - a);
        const double c2 = w * a * a + (1.0 - w) * b * b;
        lo = std::min(lo, c2);
        hi = std::max(hi, c2);
      }
    }
    const auto r = moment_range(MomentVector{{c1}});
    EXPECT_NEAR(r.lower, lo, 1e-12) << c1;
    EXPECT_NEAR(r.upper, hi, 1e-12) << c1;
  }
}

TEST(MomentRange, WidthIsProductOfPQ) {
  Rng rng(107);
  for (int t = 0; t < 300; ++t) {
    const std::size_t len = 1 + static_cast<std::size_t>(t % 10);
    const CanonicalVector p{oracle::random_interior(rng, len)};
    const auto r = moment_range(canonical_to_moments(p));
    EXPECT_NEAR(r.width(), range_width(p), 1e-12);
    double prod = 1.0;
    for (double x : p.values) prod *= x * (1.0 - x);
    EXPECT_NEAR(range_width(p), prod, 1e-15);
  }
}

TEST(MomentRange, ThirdMomentClosedForm) {
  Rng rng(108);
  for (int t = 0; t < 100; ++t) {
    const auto c = canonical_to_moments(CanonicalVector{oracle::random_interior(rng, 2)});
    const auto [lo, hi] = third_moment_range(c[0], c[1]);
    const auto r = moment_range(c);
    EXPECT_NEAR(r.lower, lo, 1e-13);
    EXPECT_NEAR(r.upper, hi, 1e-13);
  }
}

TEST(MomentRange, RejectsNonInteriorPrefix) {
  EXPECT_THROW(moment_range(MomentVector{{0.5, 0.25}}), NonInteriorError);
}

TEST(Jacobian, LowerTriangularWithRangeDiagonal) {
  Rng rng(109);
  const std::size_t len = 6;
  const double h = 1e-6;
  for (int t = 0; t < 100; ++t) {
    const auto p = oracle::random_interior(rng, len);
    for (std::size_t j = 0; j < len; ++j) {
      auto up = p, down = p;
      up[j] += h;
      down[j] -= h;
      const auto cu = canonical_to_moments(CanonicalVector{up});
      const auto cd = canonical_to_moments(CanonicalVector{down});
      for (std::size_t k = 0; k < len; ++k) {
        const double d = (cu[k] - cd[k]) / (2.0 * h);
        if (j > k) {
          EXPECT_LT(std::abs(d), 1e-6);
        } else if (j == k) {
          const CanonicalVector prefix{std::vector<double>(p.begin(), p.begin() + k)};
          EXPECT_NEAR(d, range_width(prefix), 1e-6);
        }
      }
    }
  }
}

TEST(ArcsineMoment, SmallOrders) {
  EXPECT_EQ(arcsine_moment(0), 1.0);
  EXPECT_EQ(arcsine_moment(1), 0.5);
  EXPECT_EQ(arcsine_moment(2), 0.375);
  EXPECT_EQ(arcsine_moment(3), 0.3125);
}

TEST(ArcsineMoment, LogGammaRouteAgrees) {
  for (std::size_t k : {10u, 50u, 200u}) {
    const double x = static_cast<double>(k);
    const double lg = std::lgamma(2 * x + 1) - 2 * std::lgamma(x + 1) - 2 * x * std::log(2.0);
    EXPECT_NEAR(arcsine_moment(k) / std::exp(lg), 1.0, 1e-12) << k;
  }
  const double big = arcsine_moment(1000);
  EXPECT_TRUE(std::isfinite(big));
  EXPECT_GT(big, 0.0);
  // binom(2k, k) / 4^k ~ 1 / sqrt(pi k)
  EXPECT_NEAR(big * std::sqrt(M_PI * 1000.0), 1.0, 1e-3);
}

TEST(ArcsineMoment, AllHalfCanonicalMoments) {
  const auto c = canonical_to_moments(CanonicalVector{ones_half(20)});
  for (std::size_t k = 1; k <= 20; ++k) EXPECT_NEAR(c[k - 1], arcsine_moment(k), 1e-10);
}

TEST(SigmaMatrix, Values) {
  const auto s1 = sigma_matrix(1);
  ASSERT_EQ(s1.rows(), 1);
  EXPECT_DOUBLE_EQ(s1(0, 0), 1.0 / 16.0);
  // (1/2)(c0_4 - c0_2^2) = (1/2)(35/128 - 9/64) = 17/256
  const auto s2 = sigma_matrix(2);
  EXPECT_DOUBLE_EQ(s2(0, 0), 1.0 / 16.0);
  EXPECT_DOUBLE_EQ(s2(0, 1), 1.0 / 16.0);
  EXPECT_DOUBLE_EQ(s2(1, 0), 1.0 / 16.0);
  EXPECT_DOUBLE_EQ(s2(1, 1), 17.0 / 256.0);
  EXPECT_NE(s2(1, 1), 11.0 / 128.0);
}

// Delta method: C_2 = p1^2 + p1 q1 p2, linearized at p = 1/2 with
// Var(sqrt(n) P_1) = Var(sqrt(n) P_2) -> 1/16.
TEST(SigmaMatrix, DeltaMethodAgrees) {
  const double g1 = 2 * 0.5 + (1 - 2 * 0.5) * 0.5;  // dC2/dp1 = 1
  const double g2 = 0.25;                           // dC2/dp2 = p1 q1
  EXPECT_DOUBLE_EQ((g1 * g1 + g2 * g2) / 16.0, sigma_matrix(2)(1, 1));
}

TEST(SigmaMatrix, SymmetricPositiveSemidefinite) {
  for (std::size_t k = 1; k <= 12; ++k) {
    const auto s = sigma_matrix(k);
    EXPECT_EQ((s - s.transpose()).cwiseAbs().maxCoeff(), 0.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
    EXPECT_GE(es.eigenvalues().minCoeff(), -1e-12) << k;
  }
}

TEST(MomentSpaceVolume, ExactSmallValues) {
  EXPECT_NEAR(moment_space_volume(1), 1.0, 1e-15);
  EXPECT_NEAR(moment_space_volume(2), 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(moment_space_volume(3), 1.0 / 180.0, 1e-17);
  EXPECT_NEAR(log_moment_space_volume(3), -std::log(180.0), 1e-13);
}

// Product of the Beta(j, j) normalizers of the Jacobian prod r_k.
TEST(MomentSpaceVolume, JacobianIntegralOracle) {
  for (std::size_t n = 1; n <= 6; ++n) {
    double v = 1.0;
    for (std::size_t j = 1; j < n; ++j) {
      const double e = static_cast<double>(n - j);  // exponent of p_j q_j
      v *= oracle::integrate([e](double x) { return std::pow(x * (1 - x), e); }, 0.0, 1.0);
    }
    EXPECT_NEAR(moment_space_volume(n) / v, 1.0, 1e-12) << n;
  }
}

TEST(MomentSpaceVolume, ScalesLikeTwoToMinusNSquared) {
  for (std::size_t n = 1; n <= 200; n += 7) {
    const double x = static_cast<double>(n);
    const double excess = log_moment_space_volume(n) + x * x * std::log(2.0);
    EXPECT_LE(std::abs(excess), x * (1.0 + std::log(x))) << n;
  }
}

TEST(MomentSpaceVolume, HitOrMissNTwo) {
  const auto mc = oracle::moment_space_volume_mc(2, 200000, 110);
  EXPECT_NEAR(mc.estimate, 1.0 / 6.0, 3 * mc.standard_error);
}
