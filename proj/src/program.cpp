#include "msol/program.hpp"

#include <functional>

namespace msol {

namespace {

void index_stmts(const std::vector<StmtPtr>& body, std::vector<const Stmt*>& out) {
    for (const auto& s : body) {
        if (static_cast<size_t>(s->stmt_id) >= out.size())
            out.resize(static_cast<size_t>(s->stmt_id) + 1, nullptr);
        out[static_cast<size_t>(s->stmt_id)] = s.get();
        if (s->kind == Stmt::Kind::If) {
            index_stmts(s->then_body, out);
            index_stmts(s->else_body, out);
        }
    }
}

}  // namespace

Program::Program(SourceUnit unit) : unit_(std::move(unit)) {
    for (size_t ci = 0; ci < unit_.contracts.size(); ++ci) {
        const ContractDecl& c = unit_.contracts[ci];
        for (size_t fi = 0; fi < c.functions.size(); ++fi) {
            const FunctionDecl& decl = c.functions[fi];
            FunctionInfo info;
            info.global_id = static_cast<int>(functions_.size());
            info.contract_index = static_cast<int>(ci);
            info.function_index = static_cast<int>(fi);
            info.contract = c.name;
            info.signature = decl.signature(c.name);
            info.decl = &decl;
            info.cfg = build_cfg(decl);
            info.block_offset = total_blocks_;
            info.stmt_offset = total_statements_;
            index_stmts(decl.body, info.stmts);
            total_blocks_ += static_cast<int>(info.cfg.blocks.size());
            total_statements_ += decl.num_statements;
            by_signature_[info.signature] = info.global_id;
            functions_.push_back(std::move(info));
        }
    }
    block_owner_.resize(static_cast<size_t>(total_blocks_));
    neighbors_.resize(static_cast<size_t>(total_blocks_));
    for (const FunctionInfo& f : functions_) {
        for (const auto& b : f.cfg.blocks) {
            int gid = f.block_offset + b.id;
            block_owner_[static_cast<size_t>(gid)] = f.global_id;
            std::vector<int> local = neighbors(f.cfg, b.id);
            for (int& n : local) n += f.block_offset;
            neighbors_[static_cast<size_t>(gid)] = std::move(local);
        }
    }
}

int Program::find_function(const std::string& contract, const std::string& name) const {
    for (const FunctionInfo& f : functions_)
        if (f.contract == contract && f.decl->name == name) return f.global_id;
    return -1;
}

int Program::find_by_signature(const std::string& signature) const {
    auto it = by_signature_.find(signature);
    return it == by_signature_.end() ? -1 : it->second;
}

int Program::resolve_signature_loose(const std::string& text) const {
    auto exact = by_signature_.find(text);
    if (exact != by_signature_.end()) return exact->second;
    // Try "name(types)" without the contract qualifier, then a bare name.
    std::string name = text;
    auto paren = name.find('(');
    std::string bare = paren == std::string::npos ? name : name.substr(0, paren);
    int found = -1;
    for (const FunctionInfo& f : functions_) {
        bool match;
        if (paren != std::string::npos) {
            // Compare against the unqualified signature.
            std::string unqualified = f.signature.substr(f.contract.size() + 1);
            match = unqualified == text;
        } else {
            match = f.decl->name == bare;
        }
        if (match) {
            if (found >= 0) return -1;  // ambiguous
            found = f.global_id;
        }
    }
    return found;
}

std::vector<int> Program::public_functions() const {
    std::vector<int> out;
    for (const FunctionInfo& f : functions_)
        if (f.decl->visibility == Visibility::Public) out.push_back(f.global_id);
    return out;
}

}  // namespace msol
