#pragma once

#include <json.hpp>

#include "tropgb/oracle.hpp"
#include "tropgb/precision.hpp"
#include "tropgb/problem.hpp"

namespace tropgb {

/// Settings a run was performed with (echoed into reports).
struct RunSettings {
    Algorithm algorithm = Algorithm::Naive;
    DriverOptions driver;
    bool analyze_precision = false;
    bool oracle_check = false;
};

std::string algorithm_name(Algorithm a);

/// Versioned JSON report. Field coefficients and statistics are emitted as
/// exact strings (rationals, `a + O(p^m)`), never floats.
nlohmann::json report_to_json(const GroebnerReport& report, const ProblemFile& problem,
                              const RunSettings& settings);

void attach_ledger(nlohmann::json& doc, const PrecisionLedger& ledger);
void attach_oracle_agreement(nlohmann::json& doc, bool agrees);

std::string report_to_text(const GroebnerReport& report, const ProblemFile& problem,
                           const RunSettings& settings);

} // namespace tropgb
