#include "msol/prompts.hpp"

#include "msol/static_summary.hpp"

namespace msol {

const char* const kComplexityInstruction =
    "How complex are the following Solidity code snippets (i.e., how hard is it to gain high "
    "test coverage by trying random arguments)? Rank within the range of 0 to 100. Output in "
    "the form of <Complexity 1>,<Complexity 2>,<Complexity 3>...";

const char* const kVulnInstruction =
    "How likely are the following Solidity snippets to cause vulnerabilities (e.g., logical "
    "issue, reentrancy, etc.)? Rank each in terms of 100. Output in the form of "
    "<Likelihood 1>,<Likelihood 2>,<Likelihood 3>...";

const char* const kSeqInstruction =
    "Suggest a series of interesting sequences given following the public Solidity functions "
    "and their code. Then, rank each interestingness of the sequence within the range of 0 to "
    "100. Output one sequence in a line with the form of <Function Signature 1>=><Function "
    "Signature  2>:<Interestingness>.";

const char* const kInvariantInstructionTemplate =
    "How likely is following Solidity code snippets to cause {{Invariant}} being violated? "
    "Rank each in terms of 100. Output in the form of "
    "<Likelihood 1>,<Likelihood 2>,<Likelihood 3>...";

int estimate_tokens(std::string_view text) {
    return static_cast<int>((text.size() + 3) / 4);
}

std::string instantiate_invariant_instruction(const std::string& invariant_text) {
    std::string out = kInvariantInstructionTemplate;
    const std::string placeholder = "{{Invariant}}";
    out.replace(out.find(placeholder), placeholder.size(), invariant_text);
    return out;
}

namespace {

std::string function_source(const Program& prog, int fn) {
    const FunctionInfo& f = prog.function(fn);
    return prog.unit().source.substr(f.decl->span_begin, f.decl->span_end - f.decl->span_begin);
}

std::string render_snippet(const Program& prog, int fn, const std::vector<int>& closure) {
    std::string out = "// " + prog.function(fn).signature + "\n";
    out += function_source(prog, fn);
    out += "\n";
    for (int member : closure) {
        out += "// related: " + prog.function(member).signature + "\n";
        out += function_source(prog, member);
        out += "\n";
    }
    return out;
}

}  // namespace

std::string snippet_text(const Program& prog, int fn, int budget_tokens) {
    std::vector<int> depths;
    std::vector<int> closure = dependency_closure(prog, fn, &depths);
    // closure[0] is fn itself; remainder is BFS order, so the deepest members
    // sit at the tail and are dropped first when over budget.
    std::vector<int> members(closure.begin() + 1, closure.end());
    std::string text = render_snippet(prog, fn, members);
    while (!members.empty() && estimate_tokens(text) > budget_tokens) {
        members.pop_back();
        text = render_snippet(prog, fn, members);
    }
    return text;
}

namespace {

std::string assemble(const std::string& instruction, const Program& prog,
                     const std::vector<int>& batch, int budget_tokens) {
    std::string text = instruction;
    text += "\n";
    for (size_t i = 0; i < batch.size(); ++i) {
        text += "\nSnippet " + std::to_string(i + 1) + ":\n";
        text += snippet_text(prog, batch[i], budget_tokens);
    }
    return text;
}

Prompt build_prompt(const std::string& instruction, const Program& prog,
                    const std::vector<int>& batch, int budget_tokens) {
    if (batch.empty()) throw std::invalid_argument("empty prompt batch");
    Prompt p;
    p.text = assemble(instruction, prog, batch, budget_tokens);
    p.functions = batch;
    p.estimated_tokens = estimate_tokens(p.text);
    if (p.estimated_tokens > budget_tokens)
        throw BudgetExceeded("prompt of " + std::to_string(p.estimated_tokens) +
                             " estimated tokens exceeds budget of " +
                             std::to_string(budget_tokens) + "; re-chunk the batch");
    return p;
}

}  // namespace

std::vector<std::vector<int>> chunk_functions(const Program& prog, const std::vector<int>& fns,
                                              const std::string& instruction, int budget_tokens) {
    std::vector<std::vector<int>> batches;
    std::vector<int> current;
    for (int fn : fns) {
        std::vector<int> candidate = current;
        candidate.push_back(fn);
        bool fits =
            estimate_tokens(assemble(instruction, prog, candidate, budget_tokens)) <= budget_tokens;
        if (fits) {
            current = std::move(candidate);
        } else if (current.empty()) {
            // A lone function forms a batch even when its fully truncated
            // snippet still busts the budget; building that prompt reports
            // BudgetExceeded to the caller.
            batches.push_back(std::move(candidate));
            current.clear();
        } else {
            batches.push_back(std::move(current));
            current = {fn};
        }
    }
    if (!current.empty()) batches.push_back(std::move(current));
    return batches;
}

Prompt build_complexity_prompt(const Program& prog, const std::vector<int>& batch,
                               int budget_tokens) {
    return build_prompt(kComplexityInstruction, prog, batch, budget_tokens);
}

Prompt build_vuln_prompt(const Program& prog, const std::vector<int>& batch, int budget_tokens) {
    return build_prompt(kVulnInstruction, prog, batch, budget_tokens);
}

Prompt build_invariant_prompt(const std::string& invariant_text, const Program& prog,
                              const std::vector<int>& batch, int budget_tokens) {
    return build_prompt(instantiate_invariant_instruction(invariant_text), prog, batch,
                        budget_tokens);
}

Prompt build_seq_prompt(const Program& prog, const std::vector<int>& public_fns,
                        int budget_tokens) {
    return build_prompt(kSeqInstruction, prog, public_fns, budget_tokens);
}

}  // namespace msol
