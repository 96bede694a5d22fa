#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace msol {

// Value categories of the MiniSol type system. Map is storage-only
// (address => uint) and never appears as an expression or parameter type.
enum class Type { Uint, Bool, Address, Map };

const char* type_name(Type t);

struct SourcePos {
    int line = 0;
    int col = 0;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(SourcePos pos, const std::string& msg)
        : std::runtime_error("parse error at " + std::to_string(pos.line) + ":" +
                             std::to_string(pos.col) + ": " + msg),
          pos(pos) {}
    SourcePos pos;
};

class ResolveError : public std::runtime_error {
  public:
    ResolveError(SourcePos pos, const std::string& msg)
        : std::runtime_error("resolve error at " + std::to_string(pos.line) + ":" +
                             std::to_string(pos.col) + ": " + msg),
          pos(pos) {}
    SourcePos pos;
};

enum class BinOp { Add, Sub, Mul, Div, Eq, Ne, Lt, Le, Gt, Ge };

const char* binop_spelling(BinOp op);
bool is_comparison(BinOp op);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
    enum class Kind {
        UintLit,
        BoolLit,
        AddrLit,    // @0 .. @7
        Name,       // state variable or parameter
        MapIndex,   // name[key]
        MsgSender,
        MsgValue,
        Binary,
    };

    Kind kind;
    SourcePos pos;

    uint64_t uint_value = 0;  // UintLit
    bool bool_value = false;  // BoolLit
    int addr_value = 0;       // AddrLit
    std::string name;         // Name, MapIndex
    BinOp op = BinOp::Add;    // Binary
    ExprPtr lhs;              // Binary lhs; MapIndex key
    ExprPtr rhs;              // Binary rhs

    // Filled by resolution.
    Type type = Type::Uint;
    enum class RefKind { None, StateVar, Param } ref = RefKind::None;
    int ref_index = -1;  // state var index or parameter index
};

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct Stmt {
    enum class Kind { Assign, Require, Assert, Bug, Call, If };

    Kind kind;
    SourcePos pos;

    ExprPtr target;  // Assign: Name or MapIndex
    ExprPtr value;   // Assign rhs
    ExprPtr cond;    // Require / Assert / If

    uint64_t bug_id = 0;  // Bug

    std::string callee_contract;  // Call: empty for same-contract calls
    std::string callee;           // Call
    std::vector<ExprPtr> args;    // Call

    std::vector<StmtPtr> then_body;  // If
    std::vector<StmtPtr> else_body;  // If

    // Filled by resolution.
    int stmt_id = -1;       // function-local pre-order index
    int assert_index = -1;  // k-th assert within the function (Assert only)
    int callee_contract_index = -1;
    int callee_function_index = -1;
};

struct StateVarDecl {
    std::string name;
    Type type;
    bool has_init = false;
    uint64_t init_uint = 0;
    bool init_bool = false;
    SourcePos pos;
};

struct Param {
    std::string name;
    Type type;
};

enum class Visibility { Public, Internal };

struct FunctionDecl {
    std::string name;
    std::vector<Param> params;
    Visibility visibility = Visibility::Public;
    std::vector<StmtPtr> body;
    SourcePos pos;

    // Byte offsets into the original source covering the whole declaration,
    // `function` keyword through the closing brace. Used verbatim when
    // assembling prompts.
    size_t span_begin = 0;
    size_t span_end = 0;

    // Filled by resolution.
    int num_statements = 0;  // total statements, nested included
    int num_asserts = 0;

    std::string signature(const std::string& contract_name) const;
};

struct ContractDecl {
    std::string name;
    std::vector<StateVarDecl> state_vars;
    std::vector<FunctionDecl> functions;
    SourcePos pos;

    int state_var_index(const std::string& name) const;
    int function_index(const std::string& name) const;
};

struct SourceUnit {
    std::vector<ContractDecl> contracts;
    std::string source;  // original text, spans index into this

    int contract_index(const std::string& name) const;
};

// Parses and resolves a MiniSol source unit. Throws ParseError on syntax
// errors and ResolveError when an identifier does not resolve or types do
// not check.
SourceUnit parse(const std::string& source);

}  // namespace msol
