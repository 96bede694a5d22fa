#pragma once

#include "msol/ast.hpp"

#include <utility>
#include <vector>

namespace msol {

struct BasicBlock {
    // How control leaves the block.
    //   End:         no successors (last block, or the revert sink)
    //   Fallthrough: one successor, taken unconditionally
    //   Branch:      the block's last statement is an `if`; succs = {then, else}
    //   Guard:       the block's last statement is require/assert;
    //                succs = {fallthrough, revert sink}
    enum class Term { End, Fallthrough, Branch, Guard };

    int id = 0;
    std::vector<int> stmts;  // function-local statement ids, in order
    std::vector<int> preds;
    std::vector<int> succs;  // at most 2
    Term term = Term::End;
};

struct Cfg {
    std::vector<BasicBlock> blocks;  // blocks[i].id == i
    int entry = 0;
    // Shared terminal block receiving every require/assert failure edge as
    // well as the fall-off-the-end edge; -1 when the function has no guards.
    int sink = -1;

    std::vector<std::pair<int, int>> edges() const;
    const BasicBlock& block(int id) const;
};

// Lowers a resolved function body to its control flow graph.
Cfg build_cfg(const FunctionDecl& f);

// E - N + 2 over the (connected) graph; 1 for a single-block function.
int cyclomatic(const Cfg& cfg);

// Blocks sharing at least one predecessor with `block`, excluding `block`
// itself. Sorted ascending. Throws std::out_of_range for an unknown id.
std::vector<int> neighbors(const Cfg& cfg, int block);

}  // namespace msol
