#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "momentlab/experiments.hpp"

namespace momentlab {

/// git-describe string captured at configure time.
std::string version_string();

nlohmann::json to_json(const ExperimentConfig& config);
nlohmann::json to_json(const std::vector<Check>& checks);
nlohmann::json to_json(const EsdReport& report);
nlohmann::json to_json(const CovarianceReport& report);
nlohmann::json to_json(const DensityReport& report);

/// Per-replicate rows with a header line; numbers are printed with 17
/// significant digits so output is bit-reproducible.
void write_csv(std::ostream& os, const EsdReport& report, std::uint64_t seed);
void write_csv(std::ostream& os, const CovarianceReport& report,
               const std::string& column_prefix);
void write_csv(std::ostream& os, const DensityReport& report);
void write_csv(std::ostream& os, const std::vector<Check>& checks);

}  // namespace momentlab
