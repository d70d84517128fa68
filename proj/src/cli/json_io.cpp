#include "qugame/cli/json_io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qugame::cli {

namespace {

nlohmann::json complex_pair(std::complex<double> z) { return nlohmann::json::array({z.real(), z.imag()}); }

}  // namespace

std::uint64_t parse_seed(const std::string& text, const std::string& source) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) throw UsageError(source + " is not an unsigned integer: " + text);
  return v;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("QUGAME_SEED");
  if (env == nullptr || *env == '\0') return 0;
  return parse_seed(env, "QUGAME_SEED");
}

RunManifest manifest_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("manifest must be a JSON object");
  static const char* const kKeys[] = {"subcommand", "params", "seed", "format", "output"};
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : kKeys) known = known || key == k;
    if (!known) throw UsageError("unknown manifest key: " + key);
  }
  RunManifest m;
  if (!j.contains("subcommand") || !j["subcommand"].is_string()) throw UsageError("manifest needs a subcommand string");
  m.subcommand = j["subcommand"].get<std::string>();
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw UsageError("manifest params must be an object");
    m.params = j["params"];
  }
  if (j.contains("seed")) {
    const auto& seed = j["seed"];
    if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0))
      throw UsageError("manifest seed must be an unsigned integer");
    m.seed = j["seed"].get<std::uint64_t>();
  } else {
    m.seed = default_seed();
  }
  if (j.contains("format")) {
    if (!j["format"].is_string()) throw UsageError("manifest format must be a string");
    m.format = j["format"].get<std::string>();
  }
  if (j.contains("output")) {
    if (!j["output"].is_string()) throw UsageError("manifest output must be a string");
    m.output = j["output"].get<std::string>();
  }
  return m;
}

nlohmann::json to_json(const RunManifest& m) {
  nlohmann::json j;
  j["subcommand"] = m.subcommand;
  j["params"] = m.params;
  j["seed"] = m.seed;
  j["format"] = m.format;
  if (!m.output.empty()) j["output"] = m.output;
  return j;
}

RunManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read manifest " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("manifest " + path + " is not valid JSON: " + e.what());
  }
  return manifest_from_json(j);
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json bimatrix_json(const cgame::Bimatrix& g) {
  nlohmann::json a = nlohmann::json::array();
  nlohmann::json b = nlohmann::json::array();
  for (int i = 0; i < g.rows(); ++i) {
    nlohmann::json ra = nlohmann::json::array();
    nlohmann::json rb = nlohmann::json::array();
    for (int k = 0; k < g.cols(); ++k) {
      ra.push_back(g.a()(i, k));
      rb.push_back(g.b()(i, k));
    }
    a.push_back(std::move(ra));
    b.push_back(std::move(rb));
  }
  return {{"kind", "bimatrix"}, {"row_labels", g.row_labels()}, {"col_labels", g.col_labels()}, {"a", a}, {"b", b}};
}

nlohmann::json state_json(const qstate::StateVector& s) {
  nlohmann::json amps = nlohmann::json::array();
  for (std::size_t i = 0; i < s.size(); ++i) amps.push_back(complex_pair(s[i]));
  return {{"dims", s.dims()}, {"amplitudes", std::move(amps)}};
}

nlohmann::json matrix_json(const Eigen::MatrixXcd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_pair(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qugame::cli
