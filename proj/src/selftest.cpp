#include "momentlab/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "momentlab/canonical_moments.hpp"
#include "momentlab/orthopoly.hpp"
#include "momentlab/parallel.hpp"
#include "momentlab/random.hpp"
#include "momentlab/spectral.hpp"
#include "momentlab/stats.hpp"

namespace momentlab {
namespace {

std::string describe(const char* label, double value) {
  std::ostringstream os;
  os.precision(3);
  os << label << " " << value;
  return os.str();
}

Check threshold_check(std::string name, double error, double tolerance) {
  return {std::move(name), error < tolerance,
          describe("max error", error) + describe(" tolerance", tolerance)};
}

// Random interior points draw p_j ~ U[0.1, 0.9]. Closer to the boundary the
// zeta and moment transforms lose digits through 1/q and 1/r_k factors.
constexpr double kInteriorLow = 0.1;

std::vector<double> random_canonical(Rng& rng, std::size_t len, double lo) {
  std::vector<double> p(len);
  for (auto& x : p) x = lo + (1.0 - 2.0 * lo) * rng.uniform();
  return p;
}

Check chebyshev_spectra() {
  double worst = 0.0;
  for (std::size_t m : {2u, 8u, 64u, 512u}) {
    const auto ev = eigenvalues(chebyshev_matrix(m)).eigenvalues;
    auto roots = chebyshev_roots(m);
    std::sort(roots.begin(), roots.end());
    for (std::size_t i = 0; i < m; ++i) {
      worst = std::max(worst, std::abs(ev[i] - roots[i]));
    }
  }
  return threshold_check("Chebyshev matrix spectrum equals Chebyshev roots",
                         worst, 1e-11);
}

// Coefficient errors grow about 20x per degree: the Hankel polynomial is
// evaluated exactly, but from moments already rounded to binary64.
Check recurrence_vs_hankel(std::uint64_t seed) {
  Rng rng(seed, 1);
  std::vector<double> by_degree(7, 0.0);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 1 + static_cast<std::size_t>(t % 6);
    const CanonicalVector p{random_canonical(rng, 2 * m - 1, kInteriorLow)};
    const ZetaVector z = canonical_to_zeta(p);
    const MonicPolynomial rec = monic_from_zeta(z, m);
    const MonicPolynomial han = hankel_polynomial(zeta_to_moments(z, 2 * m - 1), m);
    for (std::size_t i = 0; i <= m; ++i) {
      by_degree[m] = std::max(by_degree[m],
                              std::abs(rec.coefficients[i] - han.coefficients[i]));
    }
  }
  Check c = threshold_check("recurrence polynomial equals Hankel polynomial, m <= 6",
                            *std::max_element(by_degree.begin(), by_degree.end()),
                            1e-8);
  for (std::size_t m = 1; m <= 6; ++m) {
    c.detail += describe(m == 1 ? "; by degree" : ",", by_degree[m]);
  }
  return c;
}

Check gamma_oracle() {
  double worst = 0.0;
  for (std::size_t m = 1; m <= 8; ++m) {
    worst = std::max(worst, (gamma_matrix(m).gamma_raw -
                             quadratic_form_covariance(m))
                                .cwiseAbs()
                                .maxCoeff());
  }
  return threshold_check("Gamma closed form equals quadratic-form covariance",
                         worst, 1e-10);
}

Check moment_round_trip(std::uint64_t seed) {
  Rng rng(seed, 2);
  double worst = 0.0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t len = 1 + static_cast<std::size_t>(t % 15);
    const MomentVector c =
        canonical_to_moments(CanonicalVector{random_canonical(rng, len, kInteriorLow)});
    const MomentVector back = canonical_to_moments(moments_to_canonical(c));
    for (std::size_t i = 0; i < len; ++i) {
      worst = std::max(worst, std::abs(back[i] - c[i]));
    }
  }
  return threshold_check("moments -> canonical -> moments, length <= 15", worst,
                         1e-8);
}

// The inverse direction is limited by r_k ~ 4^-k: rounding c_k to binary64
// moves p_k by about eps / r_{k-1}.
Check canonical_round_trip(std::uint64_t seed) {
  Rng rng(seed, 6);
  std::vector<double> by_length(16, 0.0);
  for (int t = 0; t < 300; ++t) {
    const std::size_t len = 1 + static_cast<std::size_t>(t % 15);
    const CanonicalVector p{random_canonical(rng, len, kInteriorLow)};
    const CanonicalVector back = moments_to_canonical(canonical_to_moments(p));
    for (std::size_t i = 0; i < len; ++i) {
      by_length[len] = std::max(by_length[len], std::abs(back[i] - p[i]));
    }
  }
  Check c = threshold_check("canonical -> moments -> canonical, length <= 15",
                            *std::max_element(by_length.begin(), by_length.end()),
                            1e-8);
  for (std::size_t len : {5u, 9u, 12u, 15u}) {
    c.detail += describe(len == 5 ? "; length 5" : (", length " + std::to_string(len)).c_str(),
                         by_length[len]);
  }
  return c;
}

Check zeta_round_trip(std::uint64_t seed) {
  Rng rng(seed, 3);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t len = 1 + static_cast<std::size_t>(t % 15);
    const CanonicalVector p{random_canonical(rng, len, kInteriorLow)};
    const CanonicalVector back = zeta_to_canonical(canonical_to_zeta(p));
    for (std::size_t i = 0; i < len; ++i) {
      worst = std::max(worst, std::abs(back[i] - p[i]));
    }
  }
  return threshold_check("canonical -> zeta -> canonical, length <= 15", worst,
                         1e-8);
}

Check principal_moments(std::uint64_t seed) {
  Rng rng(seed, 4);
  double worst = 0.0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int t = 0; t < 20; ++t) {
      const ZetaVector z =
          canonical_to_zeta(CanonicalVector{random_canonical(rng, 2 * n - 1, kInteriorLow)});
      const CanonicalSample s{n, zeta_to_canonical(z)};
      const MomentVector from_rep = spectral_moments(build_jacobi(s, n), 2 * n - 1);
      const MomentVector direct = zeta_to_moments(z, 2 * n - 1);
      for (std::size_t j = 0; j < 2 * n - 1; ++j) {
        worst = std::max(worst, std::abs(from_rep[j] - direct[j]));
      }
    }
  }
  return threshold_check(
      "principal representation reproduces moments up to order 2n - 1", worst,
      1e-9);
}

Check arcsine_moments() {
  const std::vector<double> half(20, 0.5);
  const MomentVector c = canonical_to_moments(CanonicalVector{half});
  double worst = 0.0;
  for (std::size_t k = 1; k <= 20; ++k) {
    worst = std::max(worst, std::abs(c[k - 1] - arcsine_moment(k)));
  }
  return threshold_check("arcsine moments from all-1/2 canonical moments",
                         worst, 1e-10);
}

Check eigensolver_agreement(std::uint64_t seed) {
  Rng rng(seed, 5);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform() * 200);
    std::vector<double> d(m), e(m - 1);
    for (auto& x : d) x = rng.uniform();
    for (auto& x : e) x = rng.uniform();
    const SymmetricTridiagonal a(d, e);
    const auto ql = eigenvalues(a).eigenvalues;
    const auto bis = eigenvalues(a, EigenMethod::kBisection).eigenvalues;
    for (std::size_t i = 0; i < m; ++i) {
      worst = std::max(worst, std::abs(ql[i] - bis[i]));
    }
  }
  return threshold_check("implicit QL agrees with Sturm bisection", worst,
                         1e-10);
}

Check small_constants() {
  const double c1 = std::exp(log_root_density_constant(1));
  const double c2 = std::exp(log_root_density_constant(2));
  const double v1 = moment_space_volume(1);
  const double v2 = moment_space_volume(2);
  const double err = std::max({std::abs(c1 - 1.0), std::abs(c2 - 15.0) / 15.0,
                               std::abs(v1 - 1.0), std::abs(v2 - 1.0 / 6.0) * 6.0});
  return threshold_check("c(1) = 1, c(2) = 15, Vol(M_1) = 1, Vol(M_2) = 1/6",
                         err, 1e-12);
}

}  // namespace

Check check_affine_identity(std::uint64_t seed, std::size_t samples,
                            const KillipNenciuBuilder& builder) {
  double worst = 0.0;
  for (std::size_t r = 0; r < samples; ++r) {
    const std::size_t n = 1 + r % 50;
    const CanonicalSample s = sample_canonical({n, seed, r});
    worst = std::max(worst, max_affine_deviation(builder(s), build_jacobi(s, n)));
  }
  return threshold_check("Killip-Nenciu matrix equals 4J - 2I", worst, 1e-12);
}

std::vector<Check> run_selftest(std::uint64_t seed, unsigned threads) {
  using Task = std::function<Check()>;
  const std::vector<Task> tasks = {
      [] { return chebyshev_spectra(); },
      [seed] { return recurrence_vs_hankel(seed); },
      [seed] { return check_affine_identity(seed); },
      [] { return gamma_oracle(); },
      [seed] { return moment_round_trip(seed); },
      [seed] { return canonical_round_trip(seed); },
      [seed] { return zeta_round_trip(seed); },
      [seed] { return principal_moments(seed); },
      [] { return arcsine_moments(); },
      [seed] { return eigensolver_agreement(seed); },
      [] { return small_constants(); },
  };
  std::vector<Check> checks(tasks.size());
  parallel_for(tasks.size(), threads, [&](std::size_t i) {
    try {
      checks[i] = tasks[i]();
    } catch (const std::exception& e) {
      checks[i] = {"check " + std::to_string(i), false,
                   std::string("threw: ") + e.what()};
    }
  });
  return checks;
}

}  // namespace momentlab
