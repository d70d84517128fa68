#pragma once

#include <string>
#include <vector>

#include "qugame/cli/json_io.hpp"

namespace qugame::cli {

enum class ParamKind { kInt, kReal, kString, kBool, kIntList, kRealList, kStringList };

struct ParamSpec {
  std::string name;
  ParamKind kind;
  /// Default value; null marks an optional parameter with no default.
  nlohmann::json fallback;
  std::string help;
};

struct CommandSpec {
  std::string name;
  std::string help;
  std::vector<ParamSpec> params;
};

const std::vector<CommandSpec>& command_specs();
/// nullptr for an unknown name.
const CommandSpec* find_command(const std::string& name);

/// Converts a flag value to the parameter's JSON type. Throws UsageError.
nlohmann::json parse_param(const ParamSpec& spec, const std::string& text);

/// Fills defaults and type-checks. Throws UsageError on unknown or ill-typed parameters.
nlohmann::json normalize_params(const CommandSpec& spec, const nlohmann::json& given);

/// Runs the subcommand and returns its result object. Module errors propagate.
nlohmann::json execute(const RunManifest& m);

struct RunOutcome {
  int exit_code = kExitOk;
  /// Rendered report, or empty on error.
  std::string output;
  std::string error;
};

/// Executes, maps DomainError to 2, ResourceError to 3 and UsageError to 64,
/// renders in the requested format and writes the output file when set.
RunOutcome run(const RunManifest& m);

/// Command-line front end.
int main_entry(int argc, char** argv);

}  // namespace qugame::cli
