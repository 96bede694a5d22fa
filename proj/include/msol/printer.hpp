#pragma once

#include "msol/ast.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace msol {

// Canonical source form; parsing the result yields a structurally equal unit.
std::string print(const SourceUnit& unit);

// Structural dump used for golden snapshots of parsed units.
nlohmann::json ast_json(const SourceUnit& unit);

}  // namespace msol
