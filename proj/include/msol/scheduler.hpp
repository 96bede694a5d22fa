#pragma once

#include "msol/coverage.hpp"
#include "msol/metrics.hpp"
#include "msol/program.hpp"
#include "msol/vm.hpp"

#include <array>
#include <deque>
#include <optional>
#include <string>
#include <vector>

namespace msol {

enum class Producer { Complexity = 0, Vuln = 1, Seq = 2, Invariant = 3 };
inline constexpr size_t kNumProducers = 4;

struct EnergyParams {
    double exponent_base = 1.15;  // A
    double offset = 1200.0;       // B
    int cap = 32;                 // e_cvs <= cap * e'
    int base_energy = 32;         // E0 mutations per energy unit
    double rarity_min = 1.0;
    double rarity_max = 16.0;
    int normalizer_window = 1024;  // executions
    std::array<bool, kNumProducers> enabled{true, true, true, true};

    bool any_enabled() const {
        return enabled[0] || enabled[1] || enabled[2] || enabled[3];
    }
    void validate() const;  // throws std::invalid_argument
};

// A^c + B: stretches the 0..100 LLM score so energies spread instead of
// clustering.
double scale_score(double score, const EnergyParams& p);

// Per-block scores after scaling. A zero raw score means "no signal" and
// stays zero so that an empty or all-zero bundle degenerates to baseline.
struct ScaledScores {
    std::vector<double> complexity;
    std::vector<double> vuln;
    std::map<std::string, std::vector<double>> invariants;
};
ScaledScores scale_block_scores(const BlockScores& raw, const EnergyParams& p);

// Suggestions with signatures resolved to global function ids.
struct ResolvedSuggestion {
    std::vector<int> functions;
    double score = 0;
};
std::vector<ResolvedSuggestion> resolve_suggestions(const std::vector<SequenceSuggestion>& s,
                                                    const Program& prog);

// Mean over covered blocks of the summed scores of their neighbors.
double k_complexity(const std::set<int>& covered_blocks, const std::vector<double>& block_scores,
                    const Program& prog);
// Same shape as k_complexity over an invariant's block scores.
double k_invariant(const std::set<int>& covered_blocks, const std::vector<double>& block_scores,
                   const Program& prog);
// Sum of the scores of every block of every function entered, once per entry
// occurrence; repeats add again.
double k_vuln(const std::vector<int>& functions_entered, const std::vector<double>& block_scores,
              const Program& prog);
// Sum of the scores of suggestions embedded as ordered (not necessarily
// contiguous) subsequences of the call sequence; each suggestion counts once.
double k_seq(const std::vector<int>& call_sequence,
             const std::vector<ResolvedSuggestion>& suggestions);

struct CorpusEntry {
    TestCase tc;
    std::vector<int> call_sequence;          // global fn ids of the top-level calls
    std::set<int> blocks;                    // BB(t)
    std::vector<std::pair<int, int>> edges;  // footprint edges, sorted
    std::vector<int> functions;              // Function(t) with occurrences
    std::array<double, kNumProducers> k{};   // cached at admission
    uint64_t insert_seq = 0;
    uint64_t energy = 0;                     // e_cvs at the last visit
};

// e'(t) = E0 * clamp(mean hit count / min hit count among t's edges).
uint64_t base_energy(const CorpusEntry& entry, const CoverageMap& map, const EnergyParams& p);

// e_cvs = min(e' + sum_i e' * K_i / Z_i, cap * e'), rounded, >= 1. Disabled
// producers contribute nothing.
uint64_t combine_energy(uint64_t base, const std::array<double, kNumProducers>& k,
                        const std::array<double, kNumProducers>& z, const EnergyParams& p);

// Corpus of retained test cases with round-robin selection and the running
// per-producer normalizers (median of nonzero K over a sliding execution
// window).
class Corpus {
  public:
    explicit Corpus(EnergyParams params) : params_(std::move(params)) {}

    // False when an identical call sequence is already present.
    bool add(CorpusEntry entry, uint64_t exec_no);

    // Round-robin by insertion order; recomputes the entry's e_cvs from
    // current statistics and stores it in `energy`.
    CorpusEntry& select(const CoverageMap& map, uint64_t exec_no);

    std::array<double, kNumProducers> normalizers(uint64_t exec_no) const;

    size_t size() const { return entries_.size(); }
    const std::vector<CorpusEntry>& entries() const { return entries_; }
    const EnergyParams& params() const { return params_; }

  private:
    EnergyParams params_;
    std::vector<CorpusEntry> entries_;
    size_t cursor_ = 0;
    uint64_t next_seq_ = 0;
    // Nonzero K observations as (execution number, value).
    mutable std::array<std::deque<std::pair<uint64_t, double>>, kNumProducers> windows_;
};

}  // namespace msol
