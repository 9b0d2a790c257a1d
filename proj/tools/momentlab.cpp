// momentlab: Monte Carlo experiments on random moment sequences.
//
//   momentlab <esd|clt-roots|clt-moments|density-check|selftest>
//             --n <list> [--m M] --reps R --seed S --out PATH
//             --format csv|json [--threads T]
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "momentlab/experiments.hpp"
#include "momentlab/report.hpp"
#include "momentlab/selftest.hpp"

namespace {

using namespace momentlab;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << contents;
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

struct Output {
  std::string csv;
  nlohmann::json summary;
  std::vector<Check> checks;
};

Output run(const ExperimentConfig& config) {
  Output out;
  std::ostringstream csv;
  switch (config.command) {
    case Command::kEsd: {
      const EsdReport r = run_esd(config);
      write_csv(csv, r, config.seed);
      out.summary = to_json(r);
      out.checks = r.checks;
      break;
    }
    case Command::kCltRoots: {
      const CovarianceReport r = run_clt_roots(config);
      write_csv(csv, r, "y");
      out.summary = to_json(r);
      out.checks = r.checks;
      break;
    }
    case Command::kCltMoments: {
      const CovarianceReport r = run_clt_moments(config);
      write_csv(csv, r, "c");
      out.summary = to_json(r);
      out.checks = r.checks;
      break;
    }
    case Command::kDensityCheck: {
      const DensityReport r = run_density_check(config);
      write_csv(csv, r);
      out.summary = to_json(r);
      out.checks = r.checks;
      break;
    }
    case Command::kSelftest: {
      out.checks = run_selftest(config.seed, config.threads);
      write_csv(csv, out.checks);
      out.summary = {{"checks", to_json(out.checks)}};
      break;
    }
  }
  out.csv = csv.str();
  return out;
}

void print_checks(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random moment sequences, random orthogonal polynomials and "
               "their roots"};
  app.require_subcommand(1);

  ExperimentConfig config;
  std::string format = "csv";
  const std::map<std::string, Command> commands = {
      {"esd", Command::kEsd},
      {"clt-roots", Command::kCltRoots},
      {"clt-moments", Command::kCltMoments},
      {"density-check", Command::kDensityCheck},
      {"selftest", Command::kSelftest},
  };
  const std::map<std::string, std::string> descriptions = {
      {"esd", "empirical root distribution vs the arcsine law"},
      {"clt-roots", "fluctuations of the first m roots around Chebyshev roots"},
      {"clt-moments", "fluctuations of the first k moments"},
      {"density-check", "n = 2 joint root density goodness of fit"},
      {"selftest", "run every library invariant check"},
  };
  for (const auto& [name, cmd] : commands) {
    CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
    sub->add_option("--n", config.n_list, "moment order(s) n")->delimiter(',');
    sub->add_option("--m,--k", config.m,
                    "matrix truncation (clt-roots) or moment count (clt-moments)");
    sub->add_option("--reps", config.replicates, "replicates per n");
    sub->add_option("--seed", config.seed, "64-bit master seed");
    sub->add_option("--out", config.out, "output path");
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--threads", config.threads, "worker threads");
    sub->callback([&config, cmd = cmd] { config.command = cmd; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  config.format = format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;

  try {
    validate(config);
    const Output out = run(config);

    nlohmann::json doc = {{"config", to_json(config)}};
    doc.update(out.summary);
    if (!config.out.empty()) {
      if (config.format == OutputFormat::kCsv) {
        write_file(config.out, out.csv);
        write_file(config.out + ".json", doc.dump(2) + "\n");
      } else {
        write_file(config.out, doc.dump(2) + "\n");
      }
    }
    std::cout << "seed " << config.seed << '\n';
    if (config.command != Command::kSelftest) {
      std::cout << out.summary.dump(2) << '\n';
    }
    print_checks(out.checks);
    return all_passed(out.checks) ? 0 : kExitCheckFailed;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}
