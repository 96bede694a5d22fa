#include "msol/vm.hpp"

#include <stdexcept>

namespace msol {

std::string OracleEvent::oracle_id() const {
    switch (kind) {
        case Kind::AssertViolation: return "assert:" + site;
        case Kind::BugHit: return "bug:" + std::to_string(bug_id);
        case Kind::InvariantViolation: return "invariant:" + invariant_id;
        case Kind::Timeout: return "timeout:" + site;
    }
    return "?";
}

VmState make_genesis(const Program& prog, const GenesisSpec& spec) {
    const SourceUnit& unit = prog.unit();
    VmState state;
    state.balances.assign(static_cast<size_t>(prog.num_addresses()), 0);
    for (int a = 0; a < Program::kAddressPool; ++a)
        state.balances[static_cast<size_t>(a)] = spec.default_balance;
    for (const auto& [addr, bal] : spec.balances) {
        if (addr < 0 || addr >= Program::kAddressPool)
            throw std::invalid_argument("genesis balance for unknown address @" +
                                        std::to_string(addr));
        state.balances[static_cast<size_t>(addr)] = bal;
    }
    for (const ContractDecl& c : unit.contracts) {
        ContractStorage storage;
        storage.scalars.assign(c.state_vars.size(), 0);
        for (size_t vi = 0; vi < c.state_vars.size(); ++vi) {
            const StateVarDecl& v = c.state_vars[vi];
            if (v.type == Type::Map)
                storage.maps.emplace_back();
            else if (v.has_init)
                storage.scalars[vi] = v.type == Type::Uint ? v.init_uint : (v.init_bool ? 1 : 0);
        }
        state.contracts.push_back(std::move(storage));
    }
    for (const auto& [cname, vars] : spec.storage) {
        int ci = unit.contract_index(cname);
        if (ci < 0) throw std::invalid_argument("genesis storage for unknown contract " + cname);
        const ContractDecl& c = unit.contracts[static_cast<size_t>(ci)];
        for (const auto& [vname, value] : vars) {
            int vi = c.state_var_index(vname);
            if (vi < 0 || c.state_vars[static_cast<size_t>(vi)].type == Type::Map)
                throw std::invalid_argument("genesis storage for unknown scalar " + cname + "." +
                                            vname);
            state.contracts[static_cast<size_t>(ci)].scalars[static_cast<size_t>(vi)] = value;
        }
    }
    return state;
}

namespace {

// Revert of the current top-level call; state rollback happens at the call
// boundary, coverage and oracle events stand.
struct VmRevert {};

// Ordinal of each map-typed state variable within its contract.
int map_ordinal(const ContractDecl& c, int var_index) {
    int ordinal = 0;
    for (int i = 0; i < var_index; ++i)
        if (c.state_vars[static_cast<size_t>(i)].type == Type::Map) ++ordinal;
    return ordinal;
}

class Interpreter {
  public:
    Interpreter(const Program& prog, VmState& state, ExecResult& result,
                const InvariantBindings* invariants)
        : prog_(prog), state_(state), result_(result), invariants_(invariants) {}

    void top_level_call(const Call& call, int call_index) {
        const FunctionInfo& f = prog_.function(call.function);
        if (f.decl->visibility != Visibility::Public)
            throw std::logic_error("call to non-public function " + f.signature);
        if (call.args.size() != f.decl->params.size())
            throw std::logic_error("arity mismatch calling " + f.signature);
        for (size_t i = 0; i < call.args.size(); ++i)
            if (call.args[i].type != f.decl->params[i].type)
                throw std::logic_error("argument type mismatch calling " + f.signature);
        if (call.sender < 0 || call.sender >= Program::kAddressPool)
            throw std::logic_error("sender outside address pool");

        call_index_ = call_index;
        steps_this_call_ = 0;
        VmState snapshot = state_;
        try {
            uint64_t sender_balance = state_.balances[static_cast<size_t>(call.sender)];
            if (sender_balance < call.value) throw VmRevert{};
            uint64_t& target =
                state_.balances[static_cast<size_t>(prog_.contract_address(f.contract_index))];
            uint64_t credited;
            if (__builtin_add_overflow(target, call.value, &credited)) throw VmRevert{};
            state_.balances[static_cast<size_t>(call.sender)] -= call.value;
            target = credited;
            run_function(f, call.args, call.sender, call.value);
        } catch (const VmRevert&) {
            uint64_t steps = state_.steps;
            state_ = std::move(snapshot);
            state_.steps = steps;  // the step counter stays monotone
            result_.reverted[static_cast<size_t>(call_index)] = true;
        }
    }

  private:
    void run_function(const FunctionInfo& f, const std::vector<Value>& args, int sender,
                      uint64_t value) {
        result_.functions.push_back(f.global_id);
        int block = f.cfg.entry;
        result_.blocks.insert(f.block_offset + block);
        while (true) {
            const BasicBlock& b = f.cfg.blocks[static_cast<size_t>(block)];
            size_t n = b.stmts.size();
            bool has_terminator_stmt =
                b.term == BasicBlock::Term::Branch || b.term == BasicBlock::Term::Guard;
            size_t plain = has_terminator_stmt ? n - 1 : n;
            for (size_t i = 0; i < plain; ++i)
                exec_plain(f, *f.stmts[static_cast<size_t>(b.stmts[i])], args, sender, value);

            int next;
            switch (b.term) {
                case BasicBlock::Term::End: return;
                case BasicBlock::Term::Fallthrough: next = b.succs[0]; break;
                case BasicBlock::Term::Branch: {
                    const Stmt& s = *f.stmts[static_cast<size_t>(b.stmts[n - 1])];
                    count_step(f);
                    mark_stmt(f, s);
                    next = truthy(eval(f, *s.cond, args, sender, value)) ? b.succs[0]
                                                                         : b.succs[1];
                    break;
                }
                case BasicBlock::Term::Guard: {
                    const Stmt& s = *f.stmts[static_cast<size_t>(b.stmts[n - 1])];
                    count_step(f);
                    mark_stmt(f, s);
                    bool ok = truthy(eval(f, *s.cond, args, sender, value));
                    if (ok) {
                        next = b.succs[0];
                    } else {
                        take_edge(f, block, b.succs[1]);
                        if (s.kind == Stmt::Kind::Assert) report_assert_failure(f, s);
                        throw VmRevert{};
                    }
                    break;
                }
            }
            take_edge(f, block, next);
            block = next;
        }
    }

    void report_assert_failure(const FunctionInfo& f, const Stmt& s) {
        std::string site =
            f.contract + "." + f.decl->name + "#" + std::to_string(s.assert_index);
        if (invariants_) {
            auto it = invariants_->find({f.global_id, s.assert_index});
            if (it != invariants_->end()) {
                result_.events.push_back({OracleEvent::Kind::InvariantViolation, site, 0,
                                          it->second, call_index_});
                return;
            }
        }
        result_.events.push_back(
            {OracleEvent::Kind::AssertViolation, site, 0, "", call_index_});
    }

    void take_edge(const FunctionInfo& f, int from, int to) {
        ++result_.edges[{f.block_offset + from, f.block_offset + to}];
        result_.blocks.insert(f.block_offset + to);
    }

    void exec_plain(const FunctionInfo& f, const Stmt& s, const std::vector<Value>& args,
                    int sender, uint64_t value) {
        count_step(f);
        mark_stmt(f, s);
        switch (s.kind) {
            case Stmt::Kind::Assign: {
                Value rhs = eval(f, *s.value, args, sender, value);
                ContractStorage& storage = state_.contracts[static_cast<size_t>(f.contract_index)];
                const ContractDecl& c = prog_.unit().contracts[static_cast<size_t>(f.contract_index)];
                if (s.target->kind == Expr::Kind::MapIndex) {
                    Value key = eval(f, *s.target->lhs, args, sender, value);
                    int ordinal = map_ordinal(c, s.target->ref_index);
                    storage.maps[static_cast<size_t>(ordinal)][key.raw] = rhs.raw;
                } else {
                    storage.scalars[static_cast<size_t>(s.target->ref_index)] = rhs.raw;
                }
                return;
            }
            case Stmt::Kind::Bug:
                result_.events.push_back({OracleEvent::Kind::BugHit,
                                          f.contract + "." + f.decl->name, s.bug_id, "",
                                          call_index_});
                return;
            case Stmt::Kind::Call: {
                const FunctionInfo& callee = prog_.function(prog_.find_function(
                    prog_.unit().contracts[static_cast<size_t>(s.callee_contract_index)].name, s.callee));
                std::vector<Value> callee_args;
                callee_args.reserve(s.args.size());
                for (const auto& a : s.args)
                    callee_args.push_back(eval(f, *a, args, sender, value));
                if (callee.contract_index == f.contract_index) {
                    // Internal call: same msg context, like Solidity's jumps.
                    run_function(callee, callee_args, sender, value);
                } else {
                    // Cross-contract call: atomic sub-call, sender becomes the
                    // calling contract, no value forwarded.
                    run_function(callee, callee_args,
                                 prog_.contract_address(f.contract_index), 0);
                }
                return;
            }
            default: throw std::logic_error("unexpected statement kind mid-block");
        }
    }

    Value eval(const FunctionInfo& f, const Expr& e, const std::vector<Value>& args, int sender,
               uint64_t value) {
        switch (e.kind) {
            case Expr::Kind::UintLit: return Value::uint_v(e.uint_value);
            case Expr::Kind::BoolLit: return Value::bool_v(e.bool_value);
            case Expr::Kind::AddrLit: return Value::addr_v(e.addr_value);
            case Expr::Kind::MsgSender: return Value::addr_v(sender);
            case Expr::Kind::MsgValue: return Value::uint_v(value);
            case Expr::Kind::Name: {
                if (e.ref == Expr::RefKind::Param) return args[static_cast<size_t>(e.ref_index)];
                const ContractStorage& storage =
                    state_.contracts[static_cast<size_t>(f.contract_index)];
                return {e.type, storage.scalars[static_cast<size_t>(e.ref_index)]};
            }
            case Expr::Kind::MapIndex: {
                Value key = eval(f, *e.lhs, args, sender, value);
                const ContractDecl& c =
                    prog_.unit().contracts[static_cast<size_t>(f.contract_index)];
                int ordinal = map_ordinal(c, e.ref_index);
                const auto& table =
                    state_.contracts[static_cast<size_t>(f.contract_index)].maps[static_cast<size_t>(ordinal)];
                auto it = table.find(key.raw);
                return Value::uint_v(it == table.end() ? 0 : it->second);
            }
            case Expr::Kind::Binary: {
                Value lhs = eval(f, *e.lhs, args, sender, value);
                Value rhs = eval(f, *e.rhs, args, sender, value);
                switch (e.op) {
                    case BinOp::Add: {
                        uint64_t out;
                        if (__builtin_add_overflow(lhs.raw, rhs.raw, &out)) throw VmRevert{};
                        return Value::uint_v(out);
                    }
                    case BinOp::Sub: {
                        uint64_t out;
                        if (__builtin_sub_overflow(lhs.raw, rhs.raw, &out)) throw VmRevert{};
                        return Value::uint_v(out);
                    }
                    case BinOp::Mul: {
                        uint64_t out;
                        if (__builtin_mul_overflow(lhs.raw, rhs.raw, &out)) throw VmRevert{};
                        return Value::uint_v(out);
                    }
                    case BinOp::Div:
                        if (rhs.raw == 0) throw VmRevert{};
                        return Value::uint_v(lhs.raw / rhs.raw);
                    case BinOp::Eq: return Value::bool_v(lhs.raw == rhs.raw);
                    case BinOp::Ne: return Value::bool_v(lhs.raw != rhs.raw);
                    case BinOp::Lt: return Value::bool_v(lhs.raw < rhs.raw);
                    case BinOp::Le: return Value::bool_v(lhs.raw <= rhs.raw);
                    case BinOp::Gt: return Value::bool_v(lhs.raw > rhs.raw);
                    case BinOp::Ge: return Value::bool_v(lhs.raw >= rhs.raw);
                }
                throw std::logic_error("unhandled binop");
            }
        }
        throw std::logic_error("unhandled expression kind");
    }

    static bool truthy(const Value& v) { return v.raw != 0; }

    void mark_stmt(const FunctionInfo& f, const Stmt& s) {
        result_.statements.insert(f.stmt_offset + s.stmt_id);
    }

    void count_step(const FunctionInfo& f) {
        ++state_.steps;
        ++result_.steps;
        if (++steps_this_call_ > kStepLimitPerCall) {
            result_.events.push_back({OracleEvent::Kind::Timeout,
                                      f.contract + "." + f.decl->name, 0, "", call_index_});
            throw VmRevert{};
        }
    }

    const Program& prog_;
    VmState& state_;
    ExecResult& result_;
    const InvariantBindings* invariants_;
    int call_index_ = 0;
    uint64_t steps_this_call_ = 0;
};

}  // namespace

ExecResult execute(const Program& prog, const VmState& genesis, const TestCase& t,
                   const InvariantBindings* invariants, VmState* final_state) {
    if (t.calls.empty() || t.calls.size() > kMaxTestCaseLen)
        throw std::logic_error("test case length out of range");
    VmState state = genesis;
    ExecResult result;
    result.reverted.assign(t.calls.size(), false);
    Interpreter interp(prog, state, result, invariants);
    for (size_t i = 0; i < t.calls.size(); ++i)
        interp.top_level_call(t.calls[i], static_cast<int>(i));
    if (final_state) *final_state = std::move(state);
    return result;
}

}  // namespace msol
