#include "msol/printer.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace msol {

namespace {

void print_expr(std::ostream& os, const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::UintLit: os << e.uint_value; return;
        case Expr::Kind::BoolLit: os << (e.bool_value ? "true" : "false"); return;
        case Expr::Kind::AddrLit: os << "@" << e.addr_value; return;
        case Expr::Kind::Name: os << e.name; return;
        case Expr::Kind::MapIndex:
            os << e.name << "[";
            print_expr(os, *e.lhs);
            os << "]";
            return;
        case Expr::Kind::MsgSender: os << "msg.sender"; return;
        case Expr::Kind::MsgValue: os << "msg.value"; return;
        case Expr::Kind::Binary:
            // Fully parenthesized; reparse is trivially structure-preserving.
            os << "(";
            print_expr(os, *e.lhs);
            os << " " << binop_spelling(e.op) << " ";
            print_expr(os, *e.rhs);
            os << ")";
            return;
    }
}

void print_stmts(std::ostream& os, const std::vector<StmtPtr>& body, int indent);

void print_stmt(std::ostream& os, const Stmt& s, int indent) {
    std::string pad(static_cast<size_t>(indent) * 4, ' ');
    os << pad;
    switch (s.kind) {
        case Stmt::Kind::Assign:
            print_expr(os, *s.target);
            os << " = ";
            print_expr(os, *s.value);
            os << ";\n";
            return;
        case Stmt::Kind::Require:
        case Stmt::Kind::Assert:
            os << (s.kind == Stmt::Kind::Require ? "require(" : "assert(");
            print_expr(os, *s.cond);
            os << ");\n";
            return;
        case Stmt::Kind::Bug: os << "bug(" << s.bug_id << ");\n"; return;
        case Stmt::Kind::Call:
            if (!s.callee_contract.empty()) os << s.callee_contract << ".";
            os << s.callee << "(";
            for (size_t i = 0; i < s.args.size(); ++i) {
                if (i) os << ", ";
                print_expr(os, *s.args[i]);
            }
            os << ");\n";
            return;
        case Stmt::Kind::If:
            os << "if (";
            print_expr(os, *s.cond);
            os << ") {\n";
            print_stmts(os, s.then_body, indent + 1);
            os << pad << "}";
            if (!s.else_body.empty()) {
                os << " else {\n";
                print_stmts(os, s.else_body, indent + 1);
                os << pad << "}";
            }
            os << "\n";
            return;
    }
}

void print_stmts(std::ostream& os, const std::vector<StmtPtr>& body, int indent) {
    for (const auto& s : body) print_stmt(os, *s, indent);
}

nlohmann::json expr_json(const Expr& e) {
    nlohmann::json j;
    switch (e.kind) {
        case Expr::Kind::UintLit:
            j["kind"] = "uint";
            j["value"] = e.uint_value;
            break;
        case Expr::Kind::BoolLit:
            j["kind"] = "bool";
            j["value"] = e.bool_value;
            break;
        case Expr::Kind::AddrLit:
            j["kind"] = "address";
            j["value"] = e.addr_value;
            break;
        case Expr::Kind::Name:
            j["kind"] = "name";
            j["name"] = e.name;
            j["ref"] = e.ref == Expr::RefKind::Param ? "param" : "state";
            j["index"] = e.ref_index;
            break;
        case Expr::Kind::MapIndex:
            j["kind"] = "index";
            j["name"] = e.name;
            j["key"] = expr_json(*e.lhs);
            break;
        case Expr::Kind::MsgSender: j["kind"] = "msg.sender"; break;
        case Expr::Kind::MsgValue: j["kind"] = "msg.value"; break;
        case Expr::Kind::Binary:
            j["kind"] = "binary";
            j["op"] = binop_spelling(e.op);
            j["lhs"] = expr_json(*e.lhs);
            j["rhs"] = expr_json(*e.rhs);
            break;
    }
    j["type"] = type_name(e.type);
    return j;
}

nlohmann::json stmt_json(const Stmt& s) {
    nlohmann::json j;
    j["id"] = s.stmt_id;
    switch (s.kind) {
        case Stmt::Kind::Assign:
            j["kind"] = "assign";
            j["target"] = expr_json(*s.target);
            j["value"] = expr_json(*s.value);
            break;
        case Stmt::Kind::Require:
            j["kind"] = "require";
            j["cond"] = expr_json(*s.cond);
            break;
        case Stmt::Kind::Assert:
            j["kind"] = "assert";
            j["cond"] = expr_json(*s.cond);
            j["assert_index"] = s.assert_index;
            break;
        case Stmt::Kind::Bug:
            j["kind"] = "bug";
            j["bug_id"] = s.bug_id;
            break;
        case Stmt::Kind::Call: {
            j["kind"] = "call";
            if (!s.callee_contract.empty()) j["contract"] = s.callee_contract;
            j["function"] = s.callee;
            auto args = nlohmann::json::array();
            for (const auto& a : s.args) args.push_back(expr_json(*a));
            j["args"] = std::move(args);
            break;
        }
        case Stmt::Kind::If: {
            j["kind"] = "if";
            j["cond"] = expr_json(*s.cond);
            auto then_j = nlohmann::json::array();
            for (const auto& t : s.then_body) then_j.push_back(stmt_json(*t));
            j["then"] = std::move(then_j);
            auto else_j = nlohmann::json::array();
            for (const auto& t : s.else_body) else_j.push_back(stmt_json(*t));
            j["else"] = std::move(else_j);
            break;
        }
    }
    return j;
}

}  // namespace

std::string print(const SourceUnit& unit) {
    std::ostringstream os;
    for (size_t ci = 0; ci < unit.contracts.size(); ++ci) {
        const ContractDecl& c = unit.contracts[ci];
        if (ci) os << "\n";
        os << "contract " << c.name << " {\n";
        for (const auto& v : c.state_vars) {
            os << "    " << type_name(v.type) << " " << v.name;
            if (v.has_init) {
                os << " = ";
                if (v.type == Type::Uint)
                    os << v.init_uint;
                else
                    os << (v.init_bool ? "true" : "false");
            }
            os << ";\n";
        }
        for (const auto& f : c.functions) {
            os << "\n    function " << f.name << "(";
            for (size_t i = 0; i < f.params.size(); ++i) {
                if (i) os << ", ";
                os << type_name(f.params[i].type) << " " << f.params[i].name;
            }
            os << ") " << (f.visibility == Visibility::Public ? "public" : "internal")
               << " {\n";
            print_stmts(os, f.body, 2);
            os << "    }\n";
        }
        os << "}\n";
    }
    return os.str();
}

nlohmann::json ast_json(const SourceUnit& unit) {
    auto contracts = nlohmann::json::array();
    for (const auto& c : unit.contracts) {
        nlohmann::json cj;
        cj["name"] = c.name;
        auto vars = nlohmann::json::array();
        for (const auto& v : c.state_vars) {
            nlohmann::json vj;
            vj["name"] = v.name;
            vj["type"] = type_name(v.type);
            if (v.has_init)
                vj["init"] = v.type == Type::Uint ? nlohmann::json(v.init_uint)
                                                  : nlohmann::json(v.init_bool);
            vars.push_back(std::move(vj));
        }
        cj["state_vars"] = std::move(vars);
        auto fns = nlohmann::json::array();
        for (const auto& f : c.functions) {
            nlohmann::json fj;
            fj["name"] = f.name;
            fj["signature"] = f.signature(c.name);
            fj["visibility"] = f.visibility == Visibility::Public ? "public" : "internal";
            auto params = nlohmann::json::array();
            for (const auto& p : f.params)
                params.push_back({{"name", p.name}, {"type", type_name(p.type)}});
            fj["params"] = std::move(params);
            auto body = nlohmann::json::array();
            for (const auto& s : f.body) body.push_back(stmt_json(*s));
            fj["body"] = std::move(body);
            fj["statements"] = f.num_statements;
            fns.push_back(std::move(fj));
        }
        cj["functions"] = std::move(fns);
        contracts.push_back(std::move(cj));
    }
    return nlohmann::json{{"contracts", std::move(contracts)}};
}

}  // namespace msol
