#include "msol/cfg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace msol {

std::vector<std::pair<int, int>> Cfg::edges() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& b : blocks)
        for (int s : b.succs) out.emplace_back(b.id, s);
    return out;
}

const BasicBlock& Cfg::block(int id) const {
    if (id < 0 || static_cast<size_t>(id) >= blocks.size())
        throw std::out_of_range("block id " + std::to_string(id) + " not in cfg");
    return blocks[static_cast<size_t>(id)];
}

namespace {

class Builder {
  public:
    Cfg run(const FunctionDecl& f) {
        current_ = new_block();
        cfg_.entry = current_;
        lower_body(f.body);
        if (cfg_.sink >= 0) {
            // With a revert sink present every path, normal completion
            // included, terminates there; a lone guard then raises E-N+2 the
            // same way an if does.
            set_fallthrough(current_, cfg_.sink);
        }
        for (const auto& b : cfg_.blocks)
            for (int s : b.succs) cfg_.blocks[static_cast<size_t>(s)].preds.push_back(b.id);
        return std::move(cfg_);
    }

  private:
    int new_block() {
        BasicBlock b;
        b.id = static_cast<int>(cfg_.blocks.size());
        cfg_.blocks.push_back(std::move(b));
        return cfg_.blocks.back().id;
    }

    BasicBlock& block(int id) { return cfg_.blocks[static_cast<size_t>(id)]; }

    int sink() {
        if (cfg_.sink < 0) cfg_.sink = new_block();
        return cfg_.sink;
    }

    void set_fallthrough(int from, int to) {
        block(from).term = BasicBlock::Term::Fallthrough;
        block(from).succs = {to};
    }

    void lower_body(const std::vector<StmtPtr>& body) {
        for (const auto& s : body) lower_stmt(*s);
    }

    void lower_stmt(const Stmt& s) {
        switch (s.kind) {
            case Stmt::Kind::Assign:
            case Stmt::Kind::Bug:
            case Stmt::Kind::Call: block(current_).stmts.push_back(s.stmt_id); return;
            case Stmt::Kind::Require:
            case Stmt::Kind::Assert: {
                block(current_).stmts.push_back(s.stmt_id);
                int fail = sink();
                int cont = new_block();
                block(current_).term = BasicBlock::Term::Guard;
                block(current_).succs = {cont, fail};
                current_ = cont;
                return;
            }
            case Stmt::Kind::If: {
                block(current_).stmts.push_back(s.stmt_id);
                int cond_block = current_;
                int then_block = new_block();
                int else_block = new_block();
                int join = new_block();
                block(cond_block).term = BasicBlock::Term::Branch;
                block(cond_block).succs = {then_block, else_block};

                current_ = then_block;
                lower_body(s.then_body);
                set_fallthrough(current_, join);

                current_ = else_block;
                lower_body(s.else_body);
                set_fallthrough(current_, join);

                current_ = join;
                return;
            }
        }
    }

    Cfg cfg_;
    int current_ = 0;
};

}  // namespace

Cfg build_cfg(const FunctionDecl& f) { return Builder().run(f); }

int cyclomatic(const Cfg& cfg) {
    int edges = 0;
    for (const auto& b : cfg.blocks) edges += static_cast<int>(b.succs.size());
    return edges - static_cast<int>(cfg.blocks.size()) + 2;
}

std::vector<int> neighbors(const Cfg& cfg, int block) {
    const BasicBlock& b = cfg.block(block);
    std::set<int> out;
    for (int p : b.preds)
        for (int sibling : cfg.block(p).succs)
            if (sibling != block) out.insert(sibling);
    return {out.begin(), out.end()};
}

}  // namespace msol
