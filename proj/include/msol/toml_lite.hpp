#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace msol::toml_lite {

// Minimal TOML subset used for campaign configs: comments, [section] /
// [[array-of-tables]] headers with dotted names, and key = value pairs where
// the value is a string, integer, float, boolean, or flat array of those.
// The exact subset is documented in docs/config.md.

struct Value {
    enum class Kind { String, Int, Float, Bool, Array };
    Kind kind = Kind::String;
    std::string str;
    uint64_t integer = 0;
    double real = 0;
    bool boolean = false;
    std::vector<Value> items;

    double number() const {
        return kind == Kind::Int ? static_cast<double>(integer) : real;
    }
};

struct Table {
    // Scalar/array entries under this table, keyed by full dotted path
    // relative to the table root.
    std::map<std::string, Value> values;
    // [[name]] sections, in file order.
    std::map<std::string, std::vector<Table>> arrays;

    bool has(const std::string& path) const { return values.count(path) > 0; }
    const Value& at(const std::string& path) const;

    std::string get_string(const std::string& path, const std::string& fallback = "") const;
    uint64_t get_uint(const std::string& path, uint64_t fallback) const;
    double get_double(const std::string& path, double fallback) const;
    bool get_bool(const std::string& path, bool fallback) const;
    std::vector<std::string> get_string_array(const std::string& path) const;
    std::vector<double> get_double_array(const std::string& path) const;
    // All (suffix, value) pairs whose key starts with "prefix.".
    std::vector<std::pair<std::string, Value>> entries_under(const std::string& prefix) const;
};

class TomlError : public std::runtime_error {
  public:
    TomlError(int line, const std::string& msg)
        : std::runtime_error("config line " + std::to_string(line) + ": " + msg) {}
};

Table parse(const std::string& text);
Table parse_file(const std::string& path);

}  // namespace msol::toml_lite
