#include "msol/toml_lite.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace msol::toml_lite {

const Value& Table::at(const std::string& path) const {
    auto it = values.find(path);
    if (it == values.end()) throw std::runtime_error("config key '" + path + "' missing");
    return it->second;
}

std::string Table::get_string(const std::string& path, const std::string& fallback) const {
    if (!has(path)) return fallback;
    const Value& v = at(path);
    if (v.kind != Value::Kind::String)
        throw std::runtime_error("config key '" + path + "' is not a string");
    return v.str;
}

uint64_t Table::get_uint(const std::string& path, uint64_t fallback) const {
    if (!has(path)) return fallback;
    const Value& v = at(path);
    if (v.kind != Value::Kind::Int)
        throw std::runtime_error("config key '" + path + "' is not an integer");
    return v.integer;
}

double Table::get_double(const std::string& path, double fallback) const {
    if (!has(path)) return fallback;
    const Value& v = at(path);
    if (v.kind != Value::Kind::Int && v.kind != Value::Kind::Float)
        throw std::runtime_error("config key '" + path + "' is not a number");
    return v.number();
}

bool Table::get_bool(const std::string& path, bool fallback) const {
    if (!has(path)) return fallback;
    const Value& v = at(path);
    if (v.kind != Value::Kind::Bool)
        throw std::runtime_error("config key '" + path + "' is not a boolean");
    return v.boolean;
}

std::vector<std::string> Table::get_string_array(const std::string& path) const {
    if (!has(path)) return {};
    const Value& v = at(path);
    if (v.kind != Value::Kind::Array)
        throw std::runtime_error("config key '" + path + "' is not an array");
    std::vector<std::string> out;
    for (const Value& item : v.items) {
        if (item.kind != Value::Kind::String)
            throw std::runtime_error("config key '" + path + "' must hold strings");
        out.push_back(item.str);
    }
    return out;
}

std::vector<double> Table::get_double_array(const std::string& path) const {
    if (!has(path)) return {};
    const Value& v = at(path);
    if (v.kind != Value::Kind::Array)
        throw std::runtime_error("config key '" + path + "' is not an array");
    std::vector<double> out;
    for (const Value& item : v.items) {
        if (item.kind != Value::Kind::Int && item.kind != Value::Kind::Float)
            throw std::runtime_error("config key '" + path + "' must hold numbers");
        out.push_back(item.number());
    }
    return out;
}

std::vector<std::pair<std::string, Value>> Table::entries_under(const std::string& prefix) const {
    std::vector<std::pair<std::string, Value>> out;
    std::string p = prefix + ".";
    for (const auto& [key, value] : values)
        if (key.rfind(p, 0) == 0) out.emplace_back(key.substr(p.size()), value);
    return out;
}

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : in_(text) {}

    Table run() {
        Table root;
        Table* current = &root;
        std::string prefix;
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            std::string trimmed = strip_comment(line);
            if (trimmed.empty()) continue;
            if (trimmed.front() == '[') {
                if (trimmed.size() > 1 && trimmed[1] == '[') {
                    std::string name = header(trimmed, 2);
                    root.arrays[name].emplace_back();
                    current = &root.arrays[name].back();
                    prefix.clear();
                } else {
                    std::string name = header(trimmed, 1);
                    current = &root;
                    prefix = name;
                }
                continue;
            }
            auto eq = find_assign(trimmed);
            std::string key = trim(trimmed.substr(0, eq));
            std::string rhs = trim(trimmed.substr(eq + 1));
            if (!key.empty() && key.front() == '"') key = unquote(key);
            if (key.empty()) throw TomlError(line_no_, "empty key");
            std::string full = prefix.empty() ? key : prefix + "." + key;
            if (!current->values.emplace(full, value(rhs)).second)
                throw TomlError(line_no_, "duplicate key '" + full + "'");
        }
        return root;
    }

  private:
    std::string strip_comment(const std::string& line) const {
        std::string out;
        bool in_string = false;
        for (char c : line) {
            if (c == '"') in_string = !in_string;
            if (c == '#' && !in_string) break;
            out += c;
        }
        return trim(out);
    }

    static std::string trim(const std::string& s) {
        size_t b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return "";
        size_t e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    }

    std::string header(const std::string& line, int brackets) {
        std::string close(static_cast<size_t>(brackets), ']');
        auto end = line.find(close);
        if (end == std::string::npos) throw TomlError(line_no_, "unterminated section header");
        std::string name = trim(line.substr(static_cast<size_t>(brackets),
                                            end - static_cast<size_t>(brackets)));
        if (name.empty()) throw TomlError(line_no_, "empty section name");
        return name;
    }

    size_t find_assign(const std::string& line) {
        bool in_string = false;
        for (size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') in_string = !in_string;
            if (line[i] == '=' && !in_string) return i;
        }
        throw TomlError(line_no_, "expected key = value");
    }

    std::string unquote(const std::string& s) {
        if (s.size() < 2 || s.front() != '"' || s.back() != '"')
            throw TomlError(line_no_, "bad quoted string " + s);
        std::string out;
        for (size_t i = 1; i + 1 < s.size(); ++i) {
            if (s[i] == '\\' && i + 2 < s.size()) {
                ++i;
                switch (s[i]) {
                    case 'n': out += '\n'; break;
                    case 't': out += '\t'; break;
                    case '"': out += '"'; break;
                    case '\\': out += '\\'; break;
                    default: throw TomlError(line_no_, "unsupported escape in string");
                }
            } else {
                out += s[i];
            }
        }
        return out;
    }

    Value value(const std::string& text) {
        Value v;
        if (text.empty()) throw TomlError(line_no_, "empty value");
        if (text.front() == '"') {
            v.kind = Value::Kind::String;
            v.str = unquote(text);
            return v;
        }
        if (text.front() == '[') {
            if (text.back() != ']') throw TomlError(line_no_, "unterminated array");
            v.kind = Value::Kind::Array;
            std::string body = trim(text.substr(1, text.size() - 2));
            size_t pos = 0;
            while (pos < body.size()) {
                bool in_string = false;
                size_t end = pos;
                while (end < body.size() && (in_string || body[end] != ',')) {
                    if (body[end] == '"') in_string = !in_string;
                    ++end;
                }
                std::string item = trim(body.substr(pos, end - pos));
                if (!item.empty()) v.items.push_back(value(item));
                pos = end + 1;
            }
            return v;
        }
        if (text == "true" || text == "false") {
            v.kind = Value::Kind::Bool;
            v.boolean = text == "true";
            return v;
        }
        bool is_float = text.find('.') != std::string::npos ||
                        text.find('e') != std::string::npos ||
                        text.find('E') != std::string::npos;
        try {
            if (is_float) {
                v.kind = Value::Kind::Float;
                size_t used = 0;
                v.real = std::stod(text, &used);
                if (used != text.size()) throw std::invalid_argument(text);
            } else {
                v.kind = Value::Kind::Int;
                size_t used = 0;
                v.integer = std::stoull(text, &used, 10);
                if (used != text.size()) throw std::invalid_argument(text);
            }
        } catch (const std::exception&) {
            throw TomlError(line_no_, "cannot parse value '" + text + "'");
        }
        return v;
    }

    std::istringstream in_;
    int line_no_ = 0;
};

}  // namespace

Table parse(const std::string& text) { return Parser(text).run(); }

Table parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

}  // namespace msol::toml_lite
