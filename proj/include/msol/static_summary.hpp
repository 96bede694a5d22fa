#pragma once

#include "msol/program.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace msol {

struct FunctionSummary {
    std::string signature;
    bool is_public = false;
    int cyclomatic = 1;
    std::vector<std::string> reads;    // state variables read, sorted
    std::vector<std::string> writes;   // state variables written, sorted
    std::vector<std::string> callees;  // callee signatures, declaration order, deduplicated
};

struct StaticSummary {
    std::vector<FunctionSummary> functions;  // by global function id
};

StaticSummary summarize(const Program& prog);

// State variables read / written by the function body itself (not
// transitively), as (contract_index, var_index) pairs, sorted.
std::vector<std::pair<int, int>> reads_of(const Program& prog, int fn);
std::vector<std::pair<int, int>> writes_of(const Program& prog, int fn);

// Direct callees (internal and cross-contract) as global function ids,
// in call order, deduplicated.
std::vector<int> callees_of(const Program& prog, int fn);

// The function followed by the transitive closure of (a) its callees and
// (b) writers of any state variable it reads. Breadth-first order, ties
// broken by declaration order. `depths` (optional) receives the BFS depth of
// each member, aligned with the returned order.
std::vector<int> dependency_closure(const Program& prog, int fn,
                                    std::vector<int>* depths = nullptr);

nlohmann::json static_summary_json(const Program& prog);

}  // namespace msol
