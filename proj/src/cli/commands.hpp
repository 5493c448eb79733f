#pragma once

#include <ostream>

#include "config.hpp"
#include "report.hpp"

namespace multlag::cli {

Report verify_eom(const ScenarioConfig& cfg);
Report verify_legendre(const ScenarioConfig& cfg);
Report verify_limits(const ScenarioConfig& cfg);
Report verify_hierarchy(const ScenarioConfig& cfg);
Report verify_lax(const ScenarioConfig& cfg);
Report verify_twobody(const ScenarioConfig& cfg);

/// Writes the CSV to csv_out and returns the summary report.
Report integrate(const ScenarioConfig& cfg, std::ostream& csv_out);

/// Throws ConfigError unless the integrate options are consistent.
void validate_integrate(const ScenarioConfig& cfg);

void hierarchy_table(const ScenarioConfig& cfg, std::ostream& out);
Report hierarchy_reconstruct(const ScenarioConfig& cfg);

}  // namespace multlag::cli
