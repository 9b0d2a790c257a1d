#include "momentlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "momentlab/canonical_moments.hpp"
#include "momentlab/ensemble.hpp"
#include "momentlab/errors.hpp"
#include "momentlab/orthopoly.hpp"
#include "momentlab/parallel.hpp"
#include "momentlab/spectral.hpp"
#include "momentlab/stats.hpp"

namespace momentlab {
namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// Summary statistics of scaled deviation vectors against a limit
// covariance.
CovarianceSummary summarize(std::size_t n,
                            const std::vector<std::vector<double>>& samples,
                            const Eigen::MatrixXd& target) {
  const CovarianceEstimate est = covariance_estimate(samples);
  CovarianceSummary s;
  s.n = n;
  s.count = est.count;
  s.mean = est.mean;
  s.mean_standard_error =
      (est.cov.diagonal() / static_cast<double>(est.count)).cwiseSqrt();
  s.cov = est.cov;
  s.target = target;
  s.frobenius_to_target = (est.cov - target).norm();

  const auto d = static_cast<Eigen::Index>(target.rows());
  const Eigen::LDLT<Eigen::MatrixXd> ldlt(target);
  std::vector<double> d2;
  d2.reserve(samples.size());
  for (const auto& row : samples) {
    const Eigen::Map<const Eigen::VectorXd> y(row.data(), d);
    d2.push_back(y.dot(ldlt.solve(y)));
  }
  const double dof = static_cast<double>(d);
  const Cdf chi2 = std::function<double(double)>([dof](double x) {
    return x <= 0.0 ? 0.0 : boost::math::gamma_p(0.5 * dof, 0.5 * x);
  });
  s.mahalanobis_ks = ks_distance(EmpiricalCdf(std::move(d2)), chi2);
  s.mahalanobis_pvalue = ks_pvalue(s.mahalanobis_ks, samples.size());
  return s;
}

// Centering claim of the limit theorems: every coordinate of the mean
// deviation within 3 standard errors of 0.
Check centered_check(const CovarianceSummary& s) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < s.mean.size(); ++i) {
    worst = std::max(worst, std::abs(s.mean(i)) / s.mean_standard_error(i));
  }
  return {"mean deviation within 3 s.e. of 0, n = " + std::to_string(s.n),
          worst <= 3.0, "max |mean| / s.e. " + format_double(worst)};
}

}  // namespace

std::string command_name(Command c) {
  switch (c) {
    case Command::kEsd: return "esd";
    case Command::kCltRoots: return "clt-roots";
    case Command::kCltMoments: return "clt-moments";
    case Command::kDensityCheck: return "density-check";
    case Command::kSelftest: return "selftest";
  }
  return "unknown";
}

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed; });
}

void validate(const ExperimentConfig& config) {
  if (config.replicates < 1) throw UsageError("--reps must be >= 1");
  if (config.threads < 1) throw UsageError("--threads must be >= 1");
  for (std::size_t n : config.n_list) {
    if (n < 1) throw UsageError("all --n values must be >= 1");
  }
  const bool needs_n = config.command == Command::kEsd ||
                       config.command == Command::kCltRoots ||
                       config.command == Command::kCltMoments;
  if (needs_n && config.n_list.empty()) {
    throw UsageError(command_name(config.command) + " requires --n");
  }
  if (config.m < 1) throw UsageError("--m must be >= 1");
  if (config.command == Command::kCltRoots && !config.n_list.empty()) {
    const std::size_t min_n =
        *std::min_element(config.n_list.begin(), config.n_list.end());
    if (config.m > min_n) throw UsageError("--m must not exceed min(--n)");
  }
  if (config.command == Command::kCltMoments) {
    if (config.m > 5) throw UsageError("clt-moments supports k <= 5");
    for (std::size_t n : config.n_list) {
      if (config.m > 2 * n - 1) {
        throw UsageError("clt-moments needs k <= 2n - 1 for every n");
      }
    }
  }
  if (config.command == Command::kDensityCheck && config.replicates < 2) {
    throw UsageError("density-check needs at least 2 replicates");
  }
  if ((config.command == Command::kCltRoots ||
       config.command == Command::kCltMoments) &&
      config.replicates < 2) {
    throw UsageError("covariance estimates need at least 2 replicates");
  }
}

EsdReport run_esd(const ExperimentConfig& config) {
  validate(config);
  EsdReport report;
  // The Levy bisection probes points up to h outside [0, 1].
  const Cdf arcsine = std::function<double(double)>(
      [](double x) { return arcsine_cdf(std::clamp(x, 0.0, 1.0)); });
  for (std::size_t n : config.n_list) {
    const SymmetricTridiagonal chebyshev = chebyshev_matrix(n);
    const Cdf chebyshev_cdf = EmpiricalCdf(chebyshev_roots(n));
    std::vector<EsdRow> rows(config.replicates);
    parallel_for(config.replicates, config.threads, [&](std::size_t r) {
      const CanonicalSample s = sample_canonical({n, config.seed, r});
      const SymmetricTridiagonal jacobi = build_jacobi(s, n);
      const Cdf roots = EmpiricalCdf(eigenvalues(jacobi).eigenvalues);
      EsdRow& row = rows[r];
      row.n = n;
      row.replicate = r;
      row.ks = ks_distance(roots, arcsine);
      row.levy = levy_distance(roots, arcsine);
      row.levy_chebyshev = levy_distance(roots, chebyshev_cdf);
      row.levy_bound = levy_bound_statistic(jacobi, chebyshev);
    });

    EsdSummary s;
    s.n = n;
    std::vector<double> ks, levy, bound;
    s.worst_bound_excess = -std::numeric_limits<double>::infinity();
    for (const auto& row : rows) {
      ks.push_back(row.ks);
      levy.push_back(row.levy);
      bound.push_back(row.levy_bound);
      s.worst_bound_excess = std::max(
          s.worst_bound_excess, std::pow(row.levy_chebyshev, 3) - row.levy_bound);
    }
    s.median_ks = median(ks);
    s.median_levy = median(levy);
    s.median_levy_bound = median(bound);
    report.summary.push_back(s);
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
  }

  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& s : report.summary) worst = std::max(worst, s.worst_bound_excess);
  report.checks.push_back({"levy^3 <= (1/n) tr (J - D)^2 for every replicate",
                           worst <= 1e-12,
                           "max excess " + format_double(worst)});
  return report;
}

CovarianceReport run_clt_roots(const ExperimentConfig& config) {
  validate(config);
  const std::size_t m = config.m;
  const std::vector<double> centers = chebyshev_roots(m);  // descending
  const Eigen::MatrixXd gamma = gamma_matrix(m, GammaPrefactor::kDerived).covariance();
  const Eigen::MatrixXd gamma_paper =
      gamma_matrix(m, GammaPrefactor::kPaper).covariance();

  CovarianceReport report;
  for (std::size_t n : config.n_list) {
    const double scale = 4.0 * std::sqrt(static_cast<double>(n));
    std::vector<std::vector<double>> samples(config.replicates);
    parallel_for(config.replicates, config.threads, [&](std::size_t r) {
      const CanonicalSample s =
          sample_canonical_prefix({n, config.seed, r}, 2 * m - 1);
      std::vector<double> x = eigenvalues(build_jacobi(s, m)).eigenvalues;
      std::reverse(x.begin(), x.end());
      for (std::size_t k = 0; k < m; ++k) x[k] = scale * (x[k] - centers[k]);
      samples[r] = std::move(x);
    });
    CovarianceSummary s = summarize(n, samples, gamma);
    s.target_paper = gamma_paper;
    s.frobenius_to_target_paper = (s.cov - gamma_paper).norm();
    report.checks.push_back(centered_check(s));
    report.summary.push_back(std::move(s));
    for (std::size_t r = 0; r < samples.size(); ++r) {
      report.rows.push_back({n, r, std::move(samples[r])});
    }
  }
  return report;
}

CovarianceReport run_clt_moments(const ExperimentConfig& config) {
  validate(config);
  const std::size_t k = config.m;
  std::vector<double> c0(k);
  for (std::size_t j = 0; j < k; ++j) c0[j] = arcsine_moment(j + 1);
  const Eigen::MatrixXd sigma = sigma_matrix(k);

  CovarianceReport report;
  for (std::size_t n : config.n_list) {
    const double scale = std::sqrt(static_cast<double>(n));
    std::vector<std::vector<double>> samples(config.replicates);
    parallel_for(config.replicates, config.threads, [&](std::size_t r) {
      // c_j depends on p_1..p_j only, so a length-k prefix suffices.
      const CanonicalSample s = sample_canonical_prefix({n, config.seed, r}, k);
      std::vector<double> c = zeta_to_moments(s.zeta(), k).values;
      for (std::size_t j = 0; j < k; ++j) c[j] = scale * (c[j] - c0[j]);
      samples[r] = std::move(c);
    });
    report.summary.push_back(summarize(n, samples, sigma));
    report.checks.push_back(centered_check(report.summary.back()));
    for (std::size_t r = 0; r < samples.size(); ++r) {
      report.rows.push_back({n, r, std::move(samples[r])});
    }
  }
  return report;
}

double sorted_pair_cell_probability(double x0, double x1, double y0,
                                    double y1) {
  if (x0 == y0 && x1 == y1) {
    // Triangle {y < x} inside a diagonal square.
    return std::pow(x1 - x0, 6);
  }
  if (y1 > x0) {
    throw DomainError("cell straddles the diagonal without being a square");
  }
  // With G(x, y) = (x - y)^6, d^2 G / dx dy = -30 (x - y)^4.
  auto g = [](double x, double y) { return std::pow(x - y, 6); };
  return -(g(x1, y1) - g(x0, y1) - g(x1, y0) + g(x0, y0));
}

DensityReport run_density_check(const ExperimentConfig& config) {
  validate(config);
  constexpr std::size_t kBins = 20;
  constexpr std::size_t n = 2;
  DensityReport report;
  report.constant_n1 = std::exp(log_root_density_constant(1));
  report.constant_n2 = std::exp(log_root_density_constant(2));

  std::vector<DensityRow> rows(config.replicates);
  parallel_for(config.replicates, config.threads, [&](std::size_t r) {
    const CanonicalSample s = sample_canonical({n, config.seed, r});
    const std::vector<double> x = eigenvalues(build_jacobi(s, n)).eigenvalues;
    rows[r] = {r, x[1], x[0]};
  });

  // Cell (i, j): larger root in bin i, smaller in bin j, j <= i.
  std::vector<double> observed(kBins * kBins, 0.0);
  auto bin = [](double v) {
    return std::min(kBins - 1, static_cast<std::size_t>(v * kBins));
  };
  double sum_lower = 0.0;
  for (const auto& row : rows) {
    observed[bin(row.upper) * kBins + bin(row.lower)] += 1.0;
    sum_lower += row.lower;
  }
  const double total = static_cast<double>(rows.size());
  report.mean_lower = sum_lower / total;
  double ss = 0.0;
  for (const auto& row : rows) ss += std::pow(row.lower - report.mean_lower, 2);
  report.mean_lower_standard_error = std::sqrt(ss / (total - 1.0) / total);

  // Cells with expected count < 5 are pooled into one bin.
  double chi2 = 0.0;
  double pooled_obs = 0.0;
  double pooled_exp = 0.0;
  std::size_t bins_used = 0;
  const double w = 1.0 / kBins;
  for (std::size_t i = 0; i < kBins; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double expected =
          total * sorted_pair_cell_probability(i * w, (i + 1) * w, j * w,
                                               (j + 1) * w);
      const double obs = observed[i * kBins + j];
      if (expected < 5.0) {
        pooled_obs += obs;
        pooled_exp += expected;
        ++report.pooled_cells;
      } else {
        chi2 += (obs - expected) * (obs - expected) / expected;
        ++bins_used;
      }
    }
  }
  if (pooled_exp > 0.0) {
    chi2 += (pooled_obs - pooled_exp) * (pooled_obs - pooled_exp) / pooled_exp;
    ++bins_used;
  }
  report.chi_square = chi2;
  report.dof = static_cast<double>(bins_used - 1);
  report.pvalue = chi_square_sf(chi2, report.dof);

  report.checks.push_back({"normalizing constant c(1) = 1",
                           std::abs(report.constant_n1 - 1.0) < 1e-12,
                           format_double(report.constant_n1)});
  report.checks.push_back({"normalizing constant c(2) = 15",
                           std::abs(report.constant_n2 - 15.0) < 1e-11,
                           format_double(report.constant_n2)});
  report.checks.push_back({"chi-square GOF p-value > 1e-3",
                           report.pvalue > 1e-3,
                           "chi2 " + format_double(chi2) + ", dof " +
                               format_double(report.dof) + ", p " +
                               format_double(report.pvalue)});
  // E[min root] = int int y 30 (x - y)^4 over y < x = 1/7.
  const double z = (report.mean_lower - 1.0 / 7.0) / report.mean_lower_standard_error;
  report.checks.push_back({"mean of the smaller root within 3 s.e. of 1/7",
                           std::abs(z) <= 3.0,
                           "mean " + format_double(report.mean_lower) + ", z " +
                               format_double(z)});
  report.rows = std::move(rows);
  return report;
}

}  // namespace momentlab
