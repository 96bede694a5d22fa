#pragma once

#include "msol/coverage.hpp"
#include "msol/metrics.hpp"
#include "msol/mutator.hpp"
#include "msol/producers.hpp"
#include "msol/program.hpp"
#include "msol/scheduler.hpp"
#include "msol/vm.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace msol {

struct CampaignConfig {
    std::vector<std::string> source_files;  // as configured, for the manifest
    std::string source_text;                // concatenated sources
    GenesisSpec genesis;

    // Primary, deterministic budget; 0 stops after the seed round.
    std::optional<uint64_t> execution_budget;
    double time_budget_seconds = 0;  // 0 = unset; soft wall-clock limit
    uint64_t seed = 0;
    uint64_t tick_every = 1000;
    bool stop_on_first_bug = false;

    EnergyParams energy;
    int token_budget = kDefaultTokenBudget;

    std::string metrics_fixture;  // path; empty when using a provider
    bool use_provider = false;
    ProviderConfig provider;
    std::string cassette;  // replay file for provider queries, optional

    std::vector<InvariantDef> invariants;

    void validate() const;  // throws std::invalid_argument
};

struct Detection {
    std::string oracle;  // "bug:1", "assert:C.f#0", "invariant:id", "timeout:C.f"
    uint64_t executions = 0;
    uint64_t elapsed_ms = 0;  // virtual clock, see below
    TestCase test_case;
};

struct CoveragePoint {
    uint64_t elapsed_ms = 0;
    uint64_t executions = 0;
    uint64_t statements = 0;
    uint64_t blocks = 0;
    uint64_t edges = 0;
};

struct CampaignReport {
    std::vector<CoveragePoint> series;
    std::vector<Detection> detections;  // ordered by first occurrence
    uint64_t executions = 0;
    size_t corpus_size = 0;
    uint64_t statements_covered = 0;
    uint64_t blocks_covered = 0;
    uint64_t edges_covered = 0;
    bool stopped_on_first_bug = false;
};

// Reported times use a virtual clock derived from the execution count at a
// nominal rate, so identical (config, seed) runs serialize identically; wall
// time lives in the manifest only.
inline constexpr uint64_t kNominalExecsPerSecond = 100000;
inline uint64_t virtual_ms(uint64_t executions) {
    return executions * 1000 / kNominalExecsPerSecond;
}

// Resolves invariant sites ("Contract.fn#k") against the program.
InvariantBindings bind_invariants(const Program& prog, const std::vector<InvariantDef>& defs);

// The feedback-driven mutation loop: select, mutate for Energy(t) rounds,
// execute, admit interesting mutants, until the budget is exhausted (or the
// first oracle event under stop_on_first_bug).
CampaignReport run_campaign(const CampaignConfig& config, const Program& prog,
                            const MetricsBundle& bundle);

}  // namespace msol
