#pragma once

#include "msol/ast.hpp"
#include "msol/cfg.hpp"

#include <map>
#include <string>
#include <vector>

namespace msol {

// One function of the linked program: declaration, CFG, and the global
// numbering used by coverage and the scheduler.
struct FunctionInfo {
    int global_id = 0;
    int contract_index = 0;
    int function_index = 0;
    std::string contract;
    std::string signature;  // Contract.name(type,...)
    const FunctionDecl* decl = nullptr;
    Cfg cfg;
    int block_offset = 0;           // global id of cfg block 0
    int stmt_offset = 0;            // global id of statement 0
    std::vector<const Stmt*> stmts;  // by function-local statement id
};

// Whole-unit view: every function lowered to a CFG, with globally unique
// block and statement ids so coverage footprints can index flat arrays.
class Program {
  public:
    explicit Program(SourceUnit unit);

    const SourceUnit& unit() const { return unit_; }
    const std::vector<FunctionInfo>& functions() const { return functions_; }
    const FunctionInfo& function(int global_id) const { return functions_.at(static_cast<size_t>(global_id)); }

    int total_blocks() const { return total_blocks_; }
    int total_statements() const { return total_statements_; }

    // -1 when not found.
    int find_function(const std::string& contract, const std::string& name) const;
    int find_by_signature(const std::string& signature) const;
    // Resolves a possibly unqualified signature ("f(uint)" or even "f");
    // returns -1 when unknown or ambiguous.
    int resolve_signature_loose(const std::string& text) const;

    int global_block(int fn, int local_block) const {
        return functions_[static_cast<size_t>(fn)].block_offset + local_block;
    }
    int block_owner(int global_block) const { return block_owner_.at(static_cast<size_t>(global_block)); }
    int entry_block(int fn) const {
        const FunctionInfo& f = functions_[static_cast<size_t>(fn)];
        return f.block_offset + f.cfg.entry;
    }
    // Neighbor sets by global block id (neighbors never cross functions).
    const std::vector<int>& block_neighbors(int global_block) const {
        return neighbors_.at(static_cast<size_t>(global_block));
    }

    std::vector<int> public_functions() const;

    // Address model: 8 external sender addresses, then one per contract.
    static constexpr int kAddressPool = 8;
    int contract_address(int contract_index) const { return kAddressPool + contract_index; }
    int num_addresses() const { return kAddressPool + static_cast<int>(unit_.contracts.size()); }

  private:
    SourceUnit unit_;
    std::vector<FunctionInfo> functions_;
    std::map<std::string, int> by_signature_;
    std::vector<int> block_owner_;
    std::vector<std::vector<int>> neighbors_;
    int total_blocks_ = 0;
    int total_statements_ = 0;
};

}  // namespace msol
