#pragma once

#include "msol/llm_client.hpp"
#include "msol/metrics.hpp"
#include "msol/prompts.hpp"

#include <string>
#include <vector>

namespace msol {

// User-defined invariant: human-readable text for the prompt plus the assert
// site ("Contract.fn#k") whose failure reports it.
struct InvariantDef {
    std::string id;
    std::string text;
    std::string site;
};

struct FetchOutcome {
    MetricsBundle bundle;
    std::vector<std::string> warnings;
    // True when at least one query failed and functions fell back to score 0.
    bool degraded = false;
};

// Runs all four producers: chunk, prompt once per temperature, parse,
// aggregate. Failed chunks degrade to score 0 rather than aborting.
FetchOutcome fetch_metrics(const Program& prog, const std::vector<InvariantDef>& invariants,
                           LlmClient& client, const ProviderConfig& provider,
                           int token_budget = kDefaultTokenBudget);

}  // namespace msol
