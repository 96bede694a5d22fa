#pragma once

#include "msol/program.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace msol {

// Instruction texts sent ahead of the code snippets, one per producer.
extern const char* const kComplexityInstruction;
extern const char* const kVulnInstruction;
extern const char* const kSeqInstruction;
// Contains the {{Invariant}} placeholder.
extern const char* const kInvariantInstructionTemplate;

inline constexpr int kDefaultTokenBudget = 28000;

// ceil(characters / 4); model-agnostic heuristic.
int estimate_tokens(std::string_view text);

class BudgetExceeded : public std::runtime_error {
  public:
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct Prompt {
    std::string text;
    std::vector<int> functions;  // snippet order = score order in the reply
    int estimated_tokens = 0;
};

// Snippet for one function: its verbatim source followed by the sources of
// its dependency closure. When the full snippet would exceed `budget_tokens`
// on its own, closure members are dropped deepest-first (never the target).
std::string snippet_text(const Program& prog, int fn, int budget_tokens);

// Greedy first-fit chunking of `fns` (given order preserved) so that each
// batch prompt stays within the token budget.
std::vector<std::vector<int>> chunk_functions(const Program& prog, const std::vector<int>& fns,
                                              const std::string& instruction, int budget_tokens);

Prompt build_complexity_prompt(const Program& prog, const std::vector<int>& batch,
                               int budget_tokens = kDefaultTokenBudget);
Prompt build_vuln_prompt(const Program& prog, const std::vector<int>& batch,
                         int budget_tokens = kDefaultTokenBudget);
Prompt build_invariant_prompt(const std::string& invariant_text, const Program& prog,
                              const std::vector<int>& batch,
                              int budget_tokens = kDefaultTokenBudget);
Prompt build_seq_prompt(const Program& prog, const std::vector<int>& public_fns,
                        int budget_tokens = kDefaultTokenBudget);

std::string instantiate_invariant_instruction(const std::string& invariant_text);

}  // namespace msol
