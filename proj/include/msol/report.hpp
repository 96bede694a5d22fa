#pragma once

#include "msol/engine.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace msol {

inline constexpr const char* kToolName = "msolfuzz";
inline constexpr const char* kToolVersion = "0.1.0";

// report.json: config echo, totals, detections with triggering test cases,
// and the coverage time series. Deterministic for identical (config, seed):
// no wall-clock content and no metrics contents.
nlohmann::json report_json(const CampaignReport& report, const CampaignConfig& config,
                           const Program& prog);

// coverage.csv: elapsed_ms,executions,blocks,edges rows.
std::string coverage_csv(const CampaignReport& report);

// manifest.json: tool version, config echo, metrics provenance, and real
// wall-clock start/end. Not covered by the determinism guarantee.
nlohmann::json manifest_json(const CampaignConfig& config, const std::string& metrics_provenance,
                             const std::string& started_at, const std::string& finished_at);

nlohmann::json test_case_json(const TestCase& t, const Program& prog);

std::string iso8601_utc_now();

void write_text_file(const std::string& path, const std::string& content);

}  // namespace msol
