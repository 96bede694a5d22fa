#include "msol/static_summary.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <set>

namespace msol {

namespace {

using VarKey = std::pair<int, int>;  // (contract_index, state var index)

void walk_expr(const Expr& e, int contract_index, std::set<VarKey>& reads) {
    switch (e.kind) {
        case Expr::Kind::Name:
            if (e.ref == Expr::RefKind::StateVar) reads.insert({contract_index, e.ref_index});
            return;
        case Expr::Kind::MapIndex:
            reads.insert({contract_index, e.ref_index});
            walk_expr(*e.lhs, contract_index, reads);
            return;
        case Expr::Kind::Binary:
            walk_expr(*e.lhs, contract_index, reads);
            walk_expr(*e.rhs, contract_index, reads);
            return;
        default: return;
    }
}

struct BodyFacts {
    std::set<VarKey> reads;
    std::set<VarKey> writes;
    std::vector<int> callees;  // call order, deduplicated
};

void walk_stmts(const Program& prog, const std::vector<StmtPtr>& body, int contract_index,
                BodyFacts& out) {
    for (const auto& sp : body) {
        const Stmt& s = *sp;
        switch (s.kind) {
            case Stmt::Kind::Assign:
                out.writes.insert({contract_index, s.target->ref_index});
                if (s.target->kind == Expr::Kind::MapIndex)
                    walk_expr(*s.target->lhs, contract_index, out.reads);
                walk_expr(*s.value, contract_index, out.reads);
                break;
            case Stmt::Kind::Require:
            case Stmt::Kind::Assert: walk_expr(*s.cond, contract_index, out.reads); break;
            case Stmt::Kind::Bug: break;
            case Stmt::Kind::Call: {
                for (const auto& a : s.args) walk_expr(*a, contract_index, out.reads);
                const ContractDecl& target = prog.unit().contracts[static_cast<size_t>(s.callee_contract_index)];
                int callee = prog.find_function(target.name, s.callee);
                if (std::find(out.callees.begin(), out.callees.end(), callee) ==
                    out.callees.end())
                    out.callees.push_back(callee);
                break;
            }
            case Stmt::Kind::If:
                walk_expr(*s.cond, contract_index, out.reads);
                walk_stmts(prog, s.then_body, contract_index, out);
                walk_stmts(prog, s.else_body, contract_index, out);
                break;
        }
    }
}

BodyFacts facts_of(const Program& prog, int fn) {
    const FunctionInfo& f = prog.function(fn);
    BodyFacts out;
    walk_stmts(prog, f.decl->body, f.contract_index, out);
    return out;
}

}  // namespace

std::vector<VarKey> reads_of(const Program& prog, int fn) {
    auto f = facts_of(prog, fn);
    return {f.reads.begin(), f.reads.end()};
}

std::vector<VarKey> writes_of(const Program& prog, int fn) {
    auto f = facts_of(prog, fn);
    return {f.writes.begin(), f.writes.end()};
}

std::vector<int> callees_of(const Program& prog, int fn) { return facts_of(prog, fn).callees; }

std::vector<int> dependency_closure(const Program& prog, int fn, std::vector<int>* depths) {
    // Successors of g: callees of g, then writers of state variables g reads,
    // both in declaration order for a stable BFS.
    size_t n = prog.functions().size();
    std::vector<BodyFacts> facts(n);
    for (size_t i = 0; i < n; ++i) facts[i] = facts_of(prog, static_cast<int>(i));

    std::vector<int> order{fn};
    std::vector<int> depth{0};
    std::set<int> seen{fn};
    for (size_t head = 0; head < order.size(); ++head) {
        int g = order[head];
        std::vector<int> next = facts[static_cast<size_t>(g)].callees;
        for (const FunctionInfo& cand : prog.functions()) {
            bool writes_read_var = false;
            for (const VarKey& r : facts[static_cast<size_t>(g)].reads)
                if (facts[static_cast<size_t>(cand.global_id)].writes.count(r)) writes_read_var = true;
            if (writes_read_var &&
                std::find(next.begin(), next.end(), cand.global_id) == next.end())
                next.push_back(cand.global_id);
        }
        // Callees keep call order; writer candidates were appended in
        // declaration order. Dedup against everything already queued.
        for (int s : next) {
            if (seen.insert(s).second) {
                order.push_back(s);
                depth.push_back(depth[head] + 1);
            }
        }
    }
    if (depths) *depths = std::move(depth);
    return order;
}

StaticSummary summarize(const Program& prog) {
    StaticSummary out;
    for (const FunctionInfo& f : prog.functions()) {
        BodyFacts facts = facts_of(prog, f.global_id);
        FunctionSummary s;
        s.signature = f.signature;
        s.is_public = f.decl->visibility == Visibility::Public;
        s.cyclomatic = cyclomatic(f.cfg);
        const auto& unit = prog.unit();
        for (const VarKey& r : facts.reads)
            s.reads.push_back(unit.contracts[static_cast<size_t>(r.first)].state_vars[static_cast<size_t>(r.second)].name);
        for (const VarKey& w : facts.writes)
            s.writes.push_back(unit.contracts[static_cast<size_t>(w.first)].state_vars[static_cast<size_t>(w.second)].name);
        for (int c : facts.callees) s.callees.push_back(prog.function(c).signature);
        out.functions.push_back(std::move(s));
    }
    return out;
}

nlohmann::json static_summary_json(const Program& prog) {
    StaticSummary summary = summarize(prog);
    auto fns = nlohmann::json::array();
    for (const FunctionSummary& f : summary.functions) {
        fns.push_back({{"signature", f.signature},
                       {"visibility", f.is_public ? "public" : "internal"},
                       {"cyclomatic", f.cyclomatic},
                       {"reads", f.reads},
                       {"writes", f.writes},
                       {"callees", f.callees}});
    }
    return nlohmann::json{{"functions", std::move(fns)}};
}

}  // namespace msol
