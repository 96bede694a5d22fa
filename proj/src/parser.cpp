#include "msol/ast.hpp"

#include <array>
#include <cctype>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>

namespace msol {

const char* type_name(Type t) {
    switch (t) {
        case Type::Uint: return "uint";
        case Type::Bool: return "bool";
        case Type::Address: return "address";
        case Type::Map: return "map(address=>uint)";
    }
    return "?";
}

const char* binop_spelling(BinOp op) {
    switch (op) {
        case BinOp::Add: return "+";
        case BinOp::Sub: return "-";
        case BinOp::Mul: return "*";
        case BinOp::Div: return "/";
        case BinOp::Eq: return "==";
        case BinOp::Ne: return "!=";
        case BinOp::Lt: return "<";
        case BinOp::Le: return "<=";
        case BinOp::Gt: return ">";
        case BinOp::Ge: return ">=";
    }
    return "?";
}

bool is_comparison(BinOp op) {
    switch (op) {
        case BinOp::Eq:
        case BinOp::Ne:
        case BinOp::Lt:
        case BinOp::Le:
        case BinOp::Gt:
        case BinOp::Ge: return true;
        default: return false;
    }
}

std::string FunctionDecl::signature(const std::string& contract_name) const {
    std::string sig = contract_name + "." + name + "(";
    for (size_t i = 0; i < params.size(); ++i) {
        if (i) sig += ",";
        sig += type_name(params[i].type);
    }
    sig += ")";
    return sig;
}

int ContractDecl::state_var_index(const std::string& vname) const {
    for (size_t i = 0; i < state_vars.size(); ++i)
        if (state_vars[i].name == vname) return static_cast<int>(i);
    return -1;
}

int ContractDecl::function_index(const std::string& fname) const {
    for (size_t i = 0; i < functions.size(); ++i)
        if (functions[i].name == fname) return static_cast<int>(i);
    return -1;
}

int SourceUnit::contract_index(const std::string& cname) const {
    for (size_t i = 0; i < contracts.size(); ++i)
        if (contracts[i].name == cname) return static_cast<int>(i);
    return -1;
}

namespace {

enum class Tok {
    Ident,
    Int,
    Addr,  // @N
    KwContract,
    KwFunction,
    KwPublic,
    KwInternal,
    KwUint,
    KwBool,
    KwAddress,
    KwMap,
    KwIf,
    KwElse,
    KwRequire,
    KwAssert,
    KwBug,
    KwTrue,
    KwFalse,
    KwMsg,
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Semi,
    Comma,
    Dot,
    Assign,
    FatArrow,  // =>
    EqEq,
    NotEq,
    Lt,
    Le,
    Gt,
    Ge,
    Plus,
    Minus,
    Star,
    Slash,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    uint64_t int_value = 0;
    int addr_value = 0;
    SourcePos pos;
    size_t offset = 0;  // byte offset of first character
    size_t end = 0;     // one past last character
};

const std::unordered_map<std::string, Tok>& keyword_table() {
    static const std::unordered_map<std::string, Tok> table = {
        {"contract", Tok::KwContract}, {"function", Tok::KwFunction},
        {"public", Tok::KwPublic},     {"internal", Tok::KwInternal},
        {"uint", Tok::KwUint},         {"bool", Tok::KwBool},
        {"address", Tok::KwAddress},   {"map", Tok::KwMap},
        {"if", Tok::KwIf},             {"else", Tok::KwElse},
        {"require", Tok::KwRequire},   {"assert", Tok::KwAssert},
        {"bug", Tok::KwBug},           {"true", Tok::KwTrue},
        {"false", Tok::KwFalse},       {"msg", Tok::KwMsg},
    };
    return table;
}

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_trivia();
            Token t = next_token();
            bool end = t.kind == Tok::End;
            out.push_back(std::move(t));
            if (end) break;
        }
        return out;
    }

  private:
    void skip_trivia() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    Token next_token() {
        Token t;
        t.pos = {line_, col_};
        t.offset = pos_;
        if (pos_ >= src_.size()) {
            t.kind = Tok::End;
            t.end = pos_;
            return t;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                advance();
            t.text = src_.substr(start, pos_ - start);
            auto it = keyword_table().find(t.text);
            t.kind = it != keyword_table().end() ? it->second : Tok::Ident;
            t.end = pos_;
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            unsigned __int128 v = 0;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                v = v * 10 + static_cast<unsigned>(src_[pos_] - '0');
                if (v > std::numeric_limits<uint64_t>::max())
                    throw ParseError(t.pos, "integer literal out of range");
                advance();
            }
            t.kind = Tok::Int;
            t.int_value = static_cast<uint64_t>(v);
            t.text = src_.substr(start, pos_ - start);
            t.end = pos_;
            return t;
        }
        if (c == '@') {
            advance();
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                throw ParseError(t.pos, "expected digit after '@'");
            int v = src_[pos_] - '0';
            advance();
            if (v > 7) throw ParseError(t.pos, "address literal out of pool range @0..@7");
            t.kind = Tok::Addr;
            t.addr_value = v;
            t.end = pos_;
            return t;
        }
        auto two = [&](char a, char b) {
            return c == a && pos_ + 1 < src_.size() && src_[pos_ + 1] == b;
        };
        if (two('=', '=')) return punct(t, Tok::EqEq, 2);
        if (two('=', '>')) return punct(t, Tok::FatArrow, 2);
        if (two('!', '=')) return punct(t, Tok::NotEq, 2);
        if (two('<', '=')) return punct(t, Tok::Le, 2);
        if (two('>', '=')) return punct(t, Tok::Ge, 2);
        switch (c) {
            case '{': return punct(t, Tok::LBrace, 1);
            case '}': return punct(t, Tok::RBrace, 1);
            case '(': return punct(t, Tok::LParen, 1);
            case ')': return punct(t, Tok::RParen, 1);
            case '[': return punct(t, Tok::LBracket, 1);
            case ']': return punct(t, Tok::RBracket, 1);
            case ';': return punct(t, Tok::Semi, 1);
            case ',': return punct(t, Tok::Comma, 1);
            case '.': return punct(t, Tok::Dot, 1);
            case '=': return punct(t, Tok::Assign, 1);
            case '<': return punct(t, Tok::Lt, 1);
            case '>': return punct(t, Tok::Gt, 1);
            case '+': return punct(t, Tok::Plus, 1);
            case '-': return punct(t, Tok::Minus, 1);
            case '*': return punct(t, Tok::Star, 1);
            case '/': return punct(t, Tok::Slash, 1);
        }
        throw ParseError(t.pos, std::string("unexpected character '") + c + "'");
    }

    Token punct(Token t, Tok kind, int len) {
        t.kind = kind;
        t.text = src_.substr(pos_, len);
        for (int i = 0; i < len; ++i) advance();
        t.end = pos_;
        return t;
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
  public:
    explicit Parser(const std::string& src) : tokens_(Lexer(src).run()) {}

    SourceUnit run(const std::string& src) {
        SourceUnit unit;
        unit.source = src;
        while (!at(Tok::End)) unit.contracts.push_back(contract());
        return unit;
    }

  private:
    const Token& peek(int ahead = 0) const {
        size_t i = std::min(idx_ + ahead, tokens_.size() - 1);
        return tokens_[i];
    }
    bool at(Tok k) const { return peek().kind == k; }
    Token eat() { return tokens_[std::min(idx_++, tokens_.size() - 1)]; }
    Token expect(Tok k, const char* what) {
        if (!at(k)) throw ParseError(peek().pos, std::string("expected ") + what);
        return eat();
    }

    ContractDecl contract() {
        ContractDecl c;
        c.pos = peek().pos;
        expect(Tok::KwContract, "'contract'");
        c.name = expect(Tok::Ident, "contract name").text;
        expect(Tok::LBrace, "'{'");
        while (!at(Tok::RBrace)) {
            if (at(Tok::KwFunction))
                c.functions.push_back(function());
            else
                c.state_vars.push_back(state_var());
        }
        expect(Tok::RBrace, "'}'");
        return c;
    }

    StateVarDecl state_var() {
        StateVarDecl v;
        v.pos = peek().pos;
        if (at(Tok::KwUint)) {
            eat();
            v.type = Type::Uint;
        } else if (at(Tok::KwBool)) {
            eat();
            v.type = Type::Bool;
        } else if (at(Tok::KwMap)) {
            eat();
            expect(Tok::LParen, "'('");
            expect(Tok::KwAddress, "'address'");
            expect(Tok::FatArrow, "'=>'");
            expect(Tok::KwUint, "'uint'");
            expect(Tok::RParen, "')'");
            v.type = Type::Map;
        } else {
            throw ParseError(peek().pos, "expected state variable or function declaration");
        }
        v.name = expect(Tok::Ident, "state variable name").text;
        if (at(Tok::Assign)) {
            eat();
            if (v.type == Type::Map)
                throw ParseError(peek().pos, "map state variables cannot have initializers");
            if (v.type == Type::Uint) {
                v.init_uint = expect(Tok::Int, "integer literal").int_value;
            } else {
                if (at(Tok::KwTrue))
                    v.init_bool = true;
                else if (at(Tok::KwFalse))
                    v.init_bool = false;
                else
                    throw ParseError(peek().pos, "expected 'true' or 'false'");
                eat();
            }
            v.has_init = true;
        }
        expect(Tok::Semi, "';'");
        return v;
    }

    FunctionDecl function() {
        FunctionDecl f;
        f.pos = peek().pos;
        f.span_begin = peek().offset;
        expect(Tok::KwFunction, "'function'");
        f.name = expect(Tok::Ident, "function name").text;
        expect(Tok::LParen, "'('");
        if (!at(Tok::RParen)) {
            while (true) {
                Param p;
                if (at(Tok::KwUint))
                    p.type = Type::Uint;
                else if (at(Tok::KwBool))
                    p.type = Type::Bool;
                else if (at(Tok::KwAddress))
                    p.type = Type::Address;
                else
                    throw ParseError(peek().pos, "expected parameter type");
                eat();
                p.name = expect(Tok::Ident, "parameter name").text;
                f.params.push_back(std::move(p));
                if (!at(Tok::Comma)) break;
                eat();
            }
        }
        expect(Tok::RParen, "')'");
        if (at(Tok::KwPublic)) {
            eat();
            f.visibility = Visibility::Public;
        } else if (at(Tok::KwInternal)) {
            eat();
            f.visibility = Visibility::Internal;
        } else {
            throw ParseError(peek().pos, "expected 'public' or 'internal'");
        }
        expect(Tok::LBrace, "'{'");
        while (!at(Tok::RBrace)) f.body.push_back(statement());
        Token close = expect(Tok::RBrace, "'}'");
        f.span_end = close.end;
        return f;
    }

    std::vector<StmtPtr> block() {
        expect(Tok::LBrace, "'{'");
        std::vector<StmtPtr> out;
        while (!at(Tok::RBrace)) out.push_back(statement());
        expect(Tok::RBrace, "'}'");
        return out;
    }

    StmtPtr statement() {
        auto s = std::make_unique<Stmt>();
        s->pos = peek().pos;
        switch (peek().kind) {
            case Tok::KwIf: {
                eat();
                s->kind = Stmt::Kind::If;
                expect(Tok::LParen, "'('");
                s->cond = expr();
                expect(Tok::RParen, "')'");
                s->then_body = block();
                if (at(Tok::KwElse)) {
                    eat();
                    if (at(Tok::KwIf))
                        s->else_body.push_back(statement());
                    else
                        s->else_body = block();
                }
                return s;
            }
            case Tok::KwRequire:
            case Tok::KwAssert: {
                s->kind = peek().kind == Tok::KwRequire ? Stmt::Kind::Require : Stmt::Kind::Assert;
                eat();
                expect(Tok::LParen, "'('");
                s->cond = expr();
                expect(Tok::RParen, "')'");
                expect(Tok::Semi, "';'");
                return s;
            }
            case Tok::KwBug: {
                eat();
                s->kind = Stmt::Kind::Bug;
                expect(Tok::LParen, "'('");
                s->bug_id = expect(Tok::Int, "bug id literal").int_value;
                expect(Tok::RParen, "')'");
                expect(Tok::Semi, "';'");
                return s;
            }
            case Tok::Ident: {
                // Call (`f(...)`, `C.f(...)`) or assignment (`x = e`, `m[k] = e`).
                if (peek(1).kind == Tok::Dot) {
                    s->kind = Stmt::Kind::Call;
                    s->callee_contract = eat().text;
                    eat();  // '.'
                    s->callee = expect(Tok::Ident, "function name").text;
                    call_args(*s);
                    return s;
                }
                if (peek(1).kind == Tok::LParen) {
                    s->kind = Stmt::Kind::Call;
                    s->callee = eat().text;
                    call_args(*s);
                    return s;
                }
                s->kind = Stmt::Kind::Assign;
                s->target = primary();
                if (s->target->kind != Expr::Kind::Name && s->target->kind != Expr::Kind::MapIndex)
                    throw ParseError(s->target->pos, "assignment target must be a variable");
                expect(Tok::Assign, "'='");
                s->value = expr();
                expect(Tok::Semi, "';'");
                return s;
            }
            default: throw ParseError(peek().pos, "expected statement");
        }
    }

    void call_args(Stmt& s) {
        expect(Tok::LParen, "'('");
        if (!at(Tok::RParen)) {
            while (true) {
                s.args.push_back(expr());
                if (!at(Tok::Comma)) break;
                eat();
            }
        }
        expect(Tok::RParen, "')'");
        expect(Tok::Semi, "';'");
    }

    ExprPtr expr() {
        ExprPtr lhs = additive();
        BinOp op;
        switch (peek().kind) {
            case Tok::EqEq: op = BinOp::Eq; break;
            case Tok::NotEq: op = BinOp::Ne; break;
            case Tok::Lt: op = BinOp::Lt; break;
            case Tok::Le: op = BinOp::Le; break;
            case Tok::Gt: op = BinOp::Gt; break;
            case Tok::Ge: op = BinOp::Ge; break;
            default: return lhs;
        }
        SourcePos pos = peek().pos;
        eat();
        auto e = std::make_unique<Expr>();
        e->kind = Expr::Kind::Binary;
        e->pos = pos;
        e->op = op;
        e->lhs = std::move(lhs);
        e->rhs = additive();
        return e;
    }

    ExprPtr additive() {
        ExprPtr lhs = multiplicative();
        while (at(Tok::Plus) || at(Tok::Minus)) {
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::Binary;
            e->pos = peek().pos;
            e->op = at(Tok::Plus) ? BinOp::Add : BinOp::Sub;
            eat();
            e->lhs = std::move(lhs);
            e->rhs = multiplicative();
            lhs = std::move(e);
        }
        return lhs;
    }

    ExprPtr multiplicative() {
        ExprPtr lhs = primary();
        while (at(Tok::Star) || at(Tok::Slash)) {
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::Binary;
            e->pos = peek().pos;
            e->op = at(Tok::Star) ? BinOp::Mul : BinOp::Div;
            eat();
            e->lhs = std::move(lhs);
            e->rhs = primary();
            lhs = std::move(e);
        }
        return lhs;
    }

    ExprPtr primary() {
        auto e = std::make_unique<Expr>();
        e->pos = peek().pos;
        switch (peek().kind) {
            case Tok::Int:
                e->kind = Expr::Kind::UintLit;
                e->uint_value = eat().int_value;
                return e;
            case Tok::KwTrue:
                eat();
                e->kind = Expr::Kind::BoolLit;
                e->bool_value = true;
                return e;
            case Tok::KwFalse:
                eat();
                e->kind = Expr::Kind::BoolLit;
                e->bool_value = false;
                return e;
            case Tok::Addr:
                e->kind = Expr::Kind::AddrLit;
                e->addr_value = eat().addr_value;
                return e;
            case Tok::KwMsg: {
                eat();
                expect(Tok::Dot, "'.'");
                Token member = expect(Tok::Ident, "'sender' or 'value'");
                if (member.text == "sender")
                    e->kind = Expr::Kind::MsgSender;
                else if (member.text == "value")
                    e->kind = Expr::Kind::MsgValue;
                else
                    throw ParseError(member.pos, "unknown msg member '" + member.text + "'");
                return e;
            }
            case Tok::Ident: {
                e->name = eat().text;
                if (at(Tok::LBracket)) {
                    eat();
                    e->kind = Expr::Kind::MapIndex;
                    e->lhs = expr();
                    expect(Tok::RBracket, "']'");
                } else {
                    e->kind = Expr::Kind::Name;
                }
                return e;
            }
            case Tok::LParen: {
                eat();
                ExprPtr inner = expr();
                expect(Tok::RParen, "')'");
                return inner;
            }
            default: throw ParseError(peek().pos, "expected expression");
        }
    }

    std::vector<Token> tokens_;
    size_t idx_ = 0;
};

// Name resolution and type checking over a freshly parsed unit.
class Resolver {
  public:
    explicit Resolver(SourceUnit& unit) : unit_(unit) {}

    void run() {
        std::set<std::string> contract_names;
        for (const auto& c : unit_.contracts) {
            if (!contract_names.insert(c.name).second)
                throw ResolveError(c.pos, "duplicate contract '" + c.name + "'");
        }
        for (auto& c : unit_.contracts) {
            std::set<std::string> var_names, fn_names;
            for (const auto& v : c.state_vars)
                if (!var_names.insert(v.name).second)
                    throw ResolveError(v.pos, "duplicate state variable '" + v.name + "'");
            for (const auto& f : c.functions)
                if (!fn_names.insert(f.name).second)
                    throw ResolveError(f.pos, "duplicate function '" + f.name + "'");
        }
        for (auto& c : unit_.contracts)
            for (auto& f : c.functions) resolve_function(c, f);
    }

  private:
    void resolve_function(ContractDecl& c, FunctionDecl& f) {
        contract_ = &c;
        fn_ = &f;
        next_stmt_id_ = 0;
        next_assert_ = 0;
        std::set<std::string> param_names;
        for (const auto& p : f.params) {
            if (!param_names.insert(p.name).second)
                throw ResolveError(f.pos, "duplicate parameter '" + p.name + "'");
            if (c.state_var_index(p.name) >= 0)
                throw ResolveError(f.pos, "parameter '" + p.name + "' shadows a state variable");
        }
        resolve_body(f.body);
        f.num_statements = next_stmt_id_;
        f.num_asserts = next_assert_;
    }

    void resolve_body(std::vector<StmtPtr>& body) {
        for (auto& s : body) resolve_stmt(*s);
    }

    void resolve_stmt(Stmt& s) {
        s.stmt_id = next_stmt_id_++;
        switch (s.kind) {
            case Stmt::Kind::Assign: {
                resolve_expr(*s.target, /*lvalue=*/true);
                resolve_expr(*s.value);
                Type lhs = s.target->type;
                if (lhs != s.value->type)
                    throw ResolveError(s.pos, std::string("cannot assign ") +
                                                  type_name(s.value->type) + " to " +
                                                  type_name(lhs));
                break;
            }
            case Stmt::Kind::Require:
            case Stmt::Kind::Assert: {
                if (s.kind == Stmt::Kind::Assert) s.assert_index = next_assert_++;
                resolve_expr(*s.cond);
                if (s.cond->type != Type::Bool)
                    throw ResolveError(s.pos, "condition must be bool");
                break;
            }
            case Stmt::Kind::Bug: break;
            case Stmt::Kind::Call: resolve_call(s); break;
            case Stmt::Kind::If: {
                resolve_expr(*s.cond);
                if (s.cond->type != Type::Bool)
                    throw ResolveError(s.pos, "condition must be bool");
                resolve_body(s.then_body);
                resolve_body(s.else_body);
                break;
            }
        }
    }

    void resolve_call(Stmt& s) {
        const ContractDecl* target_contract = contract_;
        if (!s.callee_contract.empty()) {
            int ci = unit_.contract_index(s.callee_contract);
            if (ci < 0)
                throw ResolveError(s.pos, "unknown contract '" + s.callee_contract + "'");
            s.callee_contract_index = ci;
            target_contract = &unit_.contracts[ci];
        } else {
            s.callee_contract_index =
                unit_.contract_index(contract_->name);
        }
        int fi = target_contract->function_index(s.callee);
        if (fi < 0)
            throw ResolveError(s.pos, "unknown function '" + s.callee + "' in contract '" +
                                          target_contract->name + "'");
        const FunctionDecl& callee = target_contract->functions[fi];
        if (!s.callee_contract.empty() && callee.visibility != Visibility::Public)
            throw ResolveError(s.pos, "function '" + s.callee + "' is not public");
        if (s.args.size() != callee.params.size())
            throw ResolveError(s.pos, "call to '" + s.callee + "' expects " +
                                          std::to_string(callee.params.size()) + " arguments");
        for (size_t i = 0; i < s.args.size(); ++i) {
            resolve_expr(*s.args[i]);
            if (s.args[i]->type != callee.params[i].type)
                throw ResolveError(s.args[i]->pos,
                                   std::string("argument type mismatch: expected ") +
                                       type_name(callee.params[i].type));
        }
        s.callee_function_index = fi;
    }

    void resolve_expr(Expr& e, bool lvalue = false) {
        switch (e.kind) {
            case Expr::Kind::UintLit: e.type = Type::Uint; return;
            case Expr::Kind::BoolLit: e.type = Type::Bool; return;
            case Expr::Kind::AddrLit: e.type = Type::Address; return;
            case Expr::Kind::MsgSender: e.type = Type::Address; return;
            case Expr::Kind::MsgValue: e.type = Type::Uint; return;
            case Expr::Kind::Name: {
                for (size_t i = 0; i < fn_->params.size(); ++i) {
                    if (fn_->params[i].name == e.name) {
                        if (lvalue)
                            throw ResolveError(e.pos, "parameters are read-only");
                        e.ref = Expr::RefKind::Param;
                        e.ref_index = static_cast<int>(i);
                        e.type = fn_->params[i].type;
                        return;
                    }
                }
                int vi = contract_->state_var_index(e.name);
                if (vi < 0) throw ResolveError(e.pos, "unknown identifier '" + e.name + "'");
                const StateVarDecl& v = contract_->state_vars[vi];
                if (v.type == Type::Map)
                    throw ResolveError(e.pos, "map variable '" + e.name + "' must be indexed");
                e.ref = Expr::RefKind::StateVar;
                e.ref_index = vi;
                e.type = v.type;
                return;
            }
            case Expr::Kind::MapIndex: {
                int vi = contract_->state_var_index(e.name);
                if (vi < 0) throw ResolveError(e.pos, "unknown identifier '" + e.name + "'");
                if (contract_->state_vars[vi].type != Type::Map)
                    throw ResolveError(e.pos, "'" + e.name + "' is not a map");
                e.ref = Expr::RefKind::StateVar;
                e.ref_index = vi;
                resolve_expr(*e.lhs);
                if (e.lhs->type != Type::Address)
                    throw ResolveError(e.lhs->pos, "map key must be an address");
                e.type = Type::Uint;
                return;
            }
            case Expr::Kind::Binary: {
                resolve_expr(*e.lhs);
                resolve_expr(*e.rhs);
                if (e.lhs->type != e.rhs->type)
                    throw ResolveError(e.pos, "operand type mismatch");
                Type t = e.lhs->type;
                switch (e.op) {
                    case BinOp::Add:
                    case BinOp::Sub:
                    case BinOp::Mul:
                    case BinOp::Div:
                        if (t != Type::Uint)
                            throw ResolveError(e.pos, "arithmetic requires uint operands");
                        e.type = Type::Uint;
                        return;
                    case BinOp::Eq:
                    case BinOp::Ne:
                        e.type = Type::Bool;
                        return;
                    case BinOp::Lt:
                    case BinOp::Le:
                    case BinOp::Gt:
                    case BinOp::Ge:
                        if (t != Type::Uint)
                            throw ResolveError(e.pos, "ordering requires uint operands");
                        e.type = Type::Bool;
                        return;
                }
                return;
            }
        }
    }

    SourceUnit& unit_;
    ContractDecl* contract_ = nullptr;
    FunctionDecl* fn_ = nullptr;
    int next_stmt_id_ = 0;
    int next_assert_ = 0;
};

}  // namespace

SourceUnit parse(const std::string& source) {
    Parser p(source);
    SourceUnit unit = p.run(source);
    Resolver(unit).run();
    return unit;
}

}  // namespace msol
