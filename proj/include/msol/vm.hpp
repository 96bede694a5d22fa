#pragma once

#include "msol/program.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace msol {

// Runtime value; `raw` holds the uint value, 0/1 for bool, or the address
// index (0..7 external pool, 8+k for contract k).
struct Value {
    Type type = Type::Uint;
    uint64_t raw = 0;

    static Value uint_v(uint64_t v) { return {Type::Uint, v}; }
    static Value bool_v(bool v) { return {Type::Bool, v ? 1u : 0u}; }
    static Value addr_v(int idx) { return {Type::Address, static_cast<uint64_t>(idx)}; }

    friend bool operator==(const Value&, const Value&) = default;
};

struct Call {
    int function = 0;  // global function id; must be public
    std::vector<Value> args;
    int sender = 0;      // external address pool index, 0..7
    uint64_t value = 0;  // native currency attached

    friend bool operator==(const Call&, const Call&) = default;
};

struct TestCase {
    std::vector<Call> calls;  // length 1..=32

    friend bool operator==(const TestCase&, const TestCase&) = default;
};

inline constexpr size_t kMaxTestCaseLen = 32;
inline constexpr uint64_t kStepLimitPerCall = 100000;

struct OracleEvent {
    enum class Kind { AssertViolation, BugHit, InvariantViolation, Timeout };
    Kind kind;
    std::string site;          // "Contract.fn" or "Contract.fn#assertIndex"
    uint64_t bug_id = 0;       // BugHit
    std::string invariant_id;  // InvariantViolation
    int call_index = 0;        // top-level call that produced the event

    std::string oracle_id() const;
};

struct ExecResult {
    // Global block edges traversed, with per-execution hit counts.
    std::map<std::pair<int, int>, uint32_t> edges;
    std::set<int> blocks;          // BB(t): edge endpoints plus entry blocks
    std::set<int> statements;      // global statement ids executed
    std::vector<int> functions;    // Function(t): one entry per function entered
    std::vector<OracleEvent> events;
    std::vector<bool> reverted;    // per top-level call
    uint64_t steps = 0;
};

// Per-contract storage: scalars by state-var index (maps unused there) plus
// one key/value table per map-typed variable.
struct ContractStorage {
    std::vector<uint64_t> scalars;
    std::vector<std::map<uint64_t, uint64_t>> maps;  // by map ordinal

    friend bool operator==(const ContractStorage&, const ContractStorage&) = default;
};

struct VmState {
    std::vector<ContractStorage> contracts;
    std::vector<uint64_t> balances;  // external pool then contract addresses
    uint64_t steps = 0;              // monotone across calls

    friend bool operator==(const VmState&, const VmState&) = default;
};

struct GenesisSpec {
    uint64_t default_balance = 1000000000000ull;
    std::map<int, uint64_t> balances;  // external address index -> balance
    // contract name -> scalar var name -> raw value (uint or bool as 0/1)
    std::map<std::string, std::map<std::string, uint64_t>> storage;
};

// Binds assert sites to user-defined invariants: key is
// (global function id, assert index within the function).
using InvariantBindings = std::map<std::pair<int, int>, std::string>;

VmState make_genesis(const Program& prog, const GenesisSpec& spec);

// Executes the calls in order against a copy of `genesis`. Deterministic. A
// reverting call rolls back its state changes; later calls still run.
// Throws std::logic_error only for harness bugs (unresolvable call, arity or
// type mismatch). `final_state` (optional) receives the post-run state.
ExecResult execute(const Program& prog, const VmState& genesis, const TestCase& t,
                   const InvariantBindings* invariants = nullptr,
                   VmState* final_state = nullptr);

}  // namespace msol
