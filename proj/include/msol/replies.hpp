#pragma once

#include "msol/metrics.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace msol {

class MalformedResponse : public std::runtime_error {
  public:
    explicit MalformedResponse(const std::string& msg) : std::runtime_error(msg) {}
};

// Extracts the first comma-separated run of at least `expected_n` integers
// from a model reply, tolerating surrounding prose. Out-of-range values are
// clamped into [0,100] with a warning. Throws MalformedResponse when no such
// run exists.
std::vector<int> parse_scores(const std::string& text, int expected_n,
                              std::vector<std::string>* warnings = nullptr);

// Parses `sigA=>sigB[=>sigC...]:score` lines. Lines referencing unknown
// signatures are dropped with a warning; scores are clamped to [0,100].
// Throws MalformedResponse when no line parses.
std::vector<SequenceSuggestion> parse_sequences(const std::string& text, const Program& prog,
                                                std::vector<std::string>* warnings = nullptr);

// Elementwise arithmetic mean of equally long score lists, unrounded.
std::vector<double> aggregate_scores(const std::vector<std::vector<int>>& replies);

// Merges per-temperature suggestion lists; a chain appearing in several
// replies gets the mean of its observed scores. First-seen order.
std::vector<SequenceSuggestion> aggregate_sequences(
    const std::vector<std::vector<SequenceSuggestion>>& replies);

}  // namespace msol
