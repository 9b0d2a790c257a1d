#include "momentlab/report.hpp"

#include <cstdio>

namespace momentlab {
namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

nlohmann::json matrix_json(const Eigen::MatrixXd& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json vector_json(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string version_string() {
#ifdef MOMENTLAB_VERSION
  return MOMENTLAB_VERSION;
#else
  return "unknown";
#endif
}

nlohmann::json to_json(const ExperimentConfig& config) {
  return {
      {"command", command_name(config.command)},
      {"n", config.n_list},
      {"m", config.m},
      {"replicates", config.replicates},
      {"seed", config.seed},
      {"out", config.out},
      {"format", config.format == OutputFormat::kCsv ? "csv" : "json"},
      {"threads", config.threads},
      {"version", version_string()},
  };
}

nlohmann::json to_json(const std::vector<Check>& checks) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : checks) {
    out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return out;
}

nlohmann::json to_json(const EsdReport& report) {
  nlohmann::json per_n = nlohmann::json::array();
  for (const auto& s : report.summary) {
    per_n.push_back({{"n", s.n},
                     {"median_ks", s.median_ks},
                     {"median_levy", s.median_levy},
                     {"median_levy_bound", s.median_levy_bound},
                     {"worst_bound_excess", s.worst_bound_excess}});
  }
  return {{"summary", per_n}, {"checks", to_json(report.checks)}};
}

nlohmann::json to_json(const CovarianceReport& report) {
  nlohmann::json per_n = nlohmann::json::array();
  for (const auto& s : report.summary) {
    nlohmann::json j = {{"n", s.n},
                        {"count", s.count},
                        {"mean", vector_json(s.mean)},
                        {"mean_standard_error", vector_json(s.mean_standard_error)},
                        {"covariance", matrix_json(s.cov)},
                        {"target", matrix_json(s.target)},
                        {"frobenius_to_target", s.frobenius_to_target},
                        {"mahalanobis_ks", s.mahalanobis_ks},
                        {"mahalanobis_pvalue", s.mahalanobis_pvalue}};
    if (s.target_paper.size() > 0) {
      j["target_paper_prefactor"] = matrix_json(s.target_paper);
      j["frobenius_to_target_paper_prefactor"] = s.frobenius_to_target_paper;
    }
    per_n.push_back(std::move(j));
  }
  return {{"summary", per_n}, {"checks", to_json(report.checks)}};
}

nlohmann::json to_json(const DensityReport& report) {
  return {{"constant_n1", report.constant_n1},
          {"constant_n2", report.constant_n2},
          {"chi_square", report.chi_square},
          {"dof", report.dof},
          {"pvalue", report.pvalue},
          {"pooled_cells", report.pooled_cells},
          {"mean_lower_root", report.mean_lower},
          {"mean_lower_root_standard_error", report.mean_lower_standard_error},
          {"replicates", report.rows.size()},
          {"checks", to_json(report.checks)}};
}

void write_csv(std::ostream& os, const EsdReport& report, std::uint64_t seed) {
  os << "n,replicate,ks,levy,levy_chebyshev,levy_bound,seed\n";
  for (const auto& r : report.rows) {
    os << r.n << ',' << r.replicate << ',' << num(r.ks) << ',' << num(r.levy)
       << ',' << num(r.levy_chebyshev) << ',' << num(r.levy_bound) << ','
       << seed << '\n';
  }
}

void write_csv(std::ostream& os, const CovarianceReport& report,
               const std::string& column_prefix) {
  const std::size_t dim = report.rows.empty() ? 0 : report.rows.front().values.size();
  os << "n,replicate";
  for (std::size_t i = 1; i <= dim; ++i) os << ',' << column_prefix << i;
  os << '\n';
  for (const auto& r : report.rows) {
    os << r.n << ',' << r.replicate;
    for (double v : r.values) os << ',' << num(v);
    os << '\n';
  }
}

void write_csv(std::ostream& os, const DensityReport& report) {
  os << "replicate,upper_root,lower_root\n";
  for (const auto& r : report.rows) {
    os << r.replicate << ',' << num(r.upper) << ',' << num(r.lower) << '\n';
  }
}

void write_csv(std::ostream& os, const std::vector<Check>& checks) {
  os << "check,passed,detail\n";
  for (const auto& c : checks) {
    os << csv_escape(c.name) << ',' << (c.passed ? "true" : "false") << ','
       << csv_escape(c.detail) << '\n';
  }
}

}  // namespace momentlab
