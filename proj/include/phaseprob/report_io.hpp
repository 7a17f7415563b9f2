#pragma once

#include "phaseprob/classifier.hpp"
#include "phaseprob/montecarlo.hpp"

#include <json.hpp>

#include <string>

namespace phaseprob {

// Estimation report as a JSON document (schema in docs/report-schema.md).
// Wall time is only included when include_timing is set, so identical runs
// serialize to identical bytes.
nlohmann::ordered_json report_to_json(const EstimationReport& report, bool include_timing = false);

// One row per label of the report's degree: label,count,frequency,stderr.
std::string report_to_csv(const EstimationReport& report);

nlohmann::ordered_json outcome_to_json(const VectorField& f, const ClassificationOutcome& outcome);

} // namespace phaseprob
