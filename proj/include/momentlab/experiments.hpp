#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace momentlab {

enum class Command { kEsd, kCltRoots, kCltMoments, kDensityCheck, kSelftest };
enum class OutputFormat { kCsv, kJson };

inline constexpr std::uint64_t kDefaultSeed = 0x5EEDCA70;

struct ExperimentConfig {
  Command command = Command::kSelftest;
  std::vector<std::size_t> n_list;
  /// Matrix truncation for clt-roots; moment count k for clt-moments.
  std::size_t m = 1;
  std::size_t replicates = 1;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  OutputFormat format = OutputFormat::kCsv;
  unsigned threads = 1;
};

/// Thrown for invalid configurations (CLI exit code 2).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void validate(const ExperimentConfig& config);

std::string command_name(Command c);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

bool all_passed(const std::vector<Check>& checks);

// ---- esd -------------------------------------------------------------------

struct EsdRow {
  std::size_t n = 0;
  std::size_t replicate = 0;
  double ks = 0.0;               ///< KS(F_n, arcsine)
  double levy = 0.0;             ///< Levy(F_n, arcsine)
  double levy_chebyshev = 0.0;   ///< Levy(F_n, N_n), N_n = Chebyshev roots
  double levy_bound = 0.0;       ///< (1/n) tr (J - D)^2
};

struct EsdSummary {
  std::size_t n = 0;
  double median_ks = 0.0;
  double median_levy = 0.0;
  double median_levy_bound = 0.0;
  /// max over replicates of levy_chebyshev^3 - levy_bound (must be <= 0).
  double worst_bound_excess = 0.0;
};

struct EsdReport {
  std::vector<EsdRow> rows;
  std::vector<EsdSummary> summary;
  std::vector<Check> checks;
};

EsdReport run_esd(const ExperimentConfig& config);

// ---- clt-roots / clt-moments -------------------------------------------------

/// Per-replicate scaled deviation vector.
struct DeviationRow {
  std::size_t n = 0;
  std::size_t replicate = 0;
  std::vector<double> values;
};

struct CovarianceSummary {
  std::size_t n = 0;
  std::size_t count = 0;
  Eigen::VectorXd mean;
  Eigen::VectorXd mean_standard_error;
  Eigen::MatrixXd cov;
  /// Limit covariance(s) the estimate is compared against.
  Eigen::MatrixXd target;
  double frobenius_to_target = 0.0;
  /// clt-roots only: Gamma with the printed 2/m prefactor.
  Eigen::MatrixXd target_paper;
  double frobenius_to_target_paper = 0.0;
  /// KS distance / p-value of squared Mahalanobis distances (w.r.t. the
  /// target covariance) against chi-square(dim).
  double mahalanobis_ks = 0.0;
  double mahalanobis_pvalue = 0.0;
};

struct CovarianceReport {
  std::vector<DeviationRow> rows;
  std::vector<CovarianceSummary> summary;
  std::vector<Check> checks;
};

/// 4 sqrt(n) (X - x_m) for the roots X of the m x m Jacobi truncation,
/// sorted descending to match x_{k,m}.
CovarianceReport run_clt_roots(const ExperimentConfig& config);

/// sqrt(n) (C - c0) for the first k = config.m moments.
CovarianceReport run_clt_moments(const ExperimentConfig& config);

// ---- density-check -----------------------------------------------------------

struct DensityRow {
  std::size_t replicate = 0;
  double upper = 0.0;
  double lower = 0.0;
};

struct DensityReport {
  std::vector<DensityRow> rows;
  double constant_n1 = 0.0;
  double constant_n2 = 0.0;
  double chi_square = 0.0;
  double dof = 0.0;
  double pvalue = 0.0;
  std::size_t pooled_cells = 0;
  double mean_lower = 0.0;
  double mean_lower_standard_error = 0.0;
  std::vector<Check> checks;
};

/// Probability of the cell [x0, x1] x [y0, y1] (x = larger root, y = smaller
/// root) under the sorted density 30 (x - y)^4 on {x > y}. Cells must be
/// either strictly above the diagonal or a diagonal square.
double sorted_pair_cell_probability(double x0, double x1, double y0, double y1);

/// n = 2 root-pair goodness of fit on a 20 x 20 grid of the triangle.
DensityReport run_density_check(const ExperimentConfig& config);

}  // namespace momentlab
