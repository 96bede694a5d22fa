#pragma once

#include "msol/program.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <string>
#include <vector>

namespace msol {

struct SequenceSuggestion {
    std::vector<std::string> signatures;  // canonical, length >= 2
    double score = 0;                     // [0,100]

    friend bool operator==(const SequenceSuggestion&, const SequenceSuggestion&) = default;
};

// Producer output consumed by the scheduler: per-function scores plus scored
// call sequences, all in [0,100]. Missing functions mean "no signal" (0).
struct MetricsBundle {
    std::map<std::string, double> complexity;  // signature -> score
    std::map<std::string, double> vuln;
    std::map<std::string, std::map<std::string, double>> invariants;  // id -> sig -> score
    std::vector<SequenceSuggestion> sequences;
    std::string provenance;

    friend bool operator==(const MetricsBundle&, const MetricsBundle&) = default;
};

nlohmann::json metrics_to_json(const MetricsBundle& bundle);

// Parses and validates a bundle: scores in range, every signature resolves,
// sequences of length >= 2. Throws std::runtime_error with the offending
// path on violations.
MetricsBundle metrics_from_json(const nlohmann::json& j, const Program& prog);

MetricsBundle load_metrics_file(const std::string& path, const Program& prog);
void save_metrics_file(const std::string& path, const MetricsBundle& bundle);

// Raw per-block scores, indexed by global block id: every block of a scored
// function carries the function's score, everything else 0.
struct BlockScores {
    std::vector<double> complexity;
    std::vector<double> vuln;
    std::map<std::string, std::vector<double>> invariants;  // by invariant id
};

BlockScores blockify(const MetricsBundle& bundle, const Program& prog);

}  // namespace msol
