#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qugame/cgame/bimatrix.hpp"
#include "qugame/density/density_matrix.hpp"
#include "qugame/qstate/state_vector.hpp"

namespace qugame::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitUsage = 64;

/// Bad command line, manifest or parameter.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct RunManifest {
  std::string subcommand;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 0;
  /// "table" or "json".
  std::string format = "table";
  /// Empty writes to stdout.
  std::string output;
};

/// Strict decimal parse. Throws UsageError naming source on failure.
std::uint64_t parse_seed(const std::string& text, const std::string& source);

/// Seed from QUGAME_SEED, else 0. Throws UsageError when the variable is not an unsigned integer.
std::uint64_t default_seed();

/// Reads {subcommand, params, seed, format, output}; missing seed falls back to default_seed().
RunManifest manifest_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RunManifest& m);
RunManifest load_manifest(const std::string& path);

/// Two-space indented JSON with sorted keys and a trailing newline.
std::string dump_json(const nlohmann::json& j);

nlohmann::json bimatrix_json(const cgame::Bimatrix& g);
/// {dims, amplitudes: [[re, im], ...]}.
nlohmann::json state_json(const qstate::StateVector& s);
/// Rows of [re, im] pairs.
nlohmann::json matrix_json(const Eigen::MatrixXcd& m);

}  // namespace qugame::cli
