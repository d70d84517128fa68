#pragma once

#include <string>

#include <json.hpp>

namespace qugame::cli {

/// Fixed four-decimal rendering; integral JSON numbers print exactly.
std::string format_number(const nlohmann::json& v);

/// Human-readable rendering of a command result. Objects tagged
/// kind = "bimatrix" print as payoff grids.
std::string render_table(const nlohmann::json& result);

}  // namespace qugame::cli
