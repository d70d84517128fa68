#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "qugame/cgame/bimatrix.hpp"
#include "qugame/cli.hpp"

using namespace qugame::cli;
using nlohmann::json;

namespace {

RunManifest manifest(const std::string& sub, json params = json::object(), std::uint64_t seed = 0,
                     const std::string& format = "json") {
  RunManifest m;
  m.subcommand = sub;
  m.params = std::move(params);
  m.seed = seed;
  m.format = format;
  return m;
}

json result_of(const RunManifest& m) {
  const RunOutcome r = run(m);
  REQUIRE(r.exit_code == kExitOk);
  return json::parse(r.output).at("result");
}

void collect_numbers(const json& v, std::vector<std::string>& out) {
  if (v.is_number()) {
    out.push_back(format_number(v));
  } else if (v.is_structured()) {
    for (const auto& e : v) collect_numbers(e, out);
  }
}

std::map<std::string, int> numeric_tokens(const std::string& text) {
  std::map<std::string, int> counts;
  const std::string body = text.substr(text.find('\n') + 1);
  static const std::regex number(R"(-?\d+(\.\d+)?)");
  for (auto it = std::sregex_iterator(body.begin(), body.end(), number); it != std::sregex_iterator(); ++it)
    ++counts[it->str()];
  return counts;
}

int shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(json(0.945312)) == "0.9453");
  CHECK(format_number(json(5)) == "5");
  CHECK(format_number(json(-1e-9)) == "0.0000");
  CHECK(format_number(json(2.0)) == "2.0000");
}

TEST_CASE("grover subcommand") {
  const json r = result_of(manifest("grover", {{"n", 3}, {"target", 5}}));
  CHECK(r["k"] == 2);
  CHECK(std::abs(r["success"].get<double>() - 0.9453) < 5e-5);
  const RunOutcome t = run(manifest("grover", {{"n", 3}, {"target", 5}}, 0, "table"));
  CHECK(t.output.find("k: 2\n") != std::string::npos);
  CHECK(t.output.find("success: 0.9453\n") != std::string::npos);
}

TEST_CASE("rsa subcommand") {
  const json r = result_of(manifest("rsa", {{"N", 77}, {"e", 11}, {"cipher", 67}}, 1));
  CHECK(r["plaintext"] == 23);
  CHECK(r["p"] == 7);
  CHECK(r["q"] == 11);
  CHECK(r["phi"] == 60);
  CHECK(r["d"] == 11);
  CHECK(r["shor"]["rounds"].get<int>() <= 25);
}

TEST_CASE("tables subcommand reproduces the quantum prisoner's dilemma") {
  const json r = result_of(manifest("tables", {{"game", "pd"}, {"moves", {"I", "X", "H", "Z"}}}));
  const double a[4][4] = {{3, 0, 0.5, 1}, {5, 1, 0.5, 0}, {3, 3, 2.25, 1.5}, {1, 5, 4, 3}};
  const double b[4][4] = {{3, 5, 3, 1}, {0, 1, 3, 5}, {0.5, 0.5, 2.25, 4}, {1, 0, 1.5, 3}};
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      CHECK(std::abs(r["table"]["a"][i][k].get<double>() - a[i][k]) < 1e-12);
      CHECK(std::abs(r["table"]["b"][i][k].get<double>() - b[i][k]) < 1e-12);
    }
  }
  REQUIRE(r["pure_nash"].size() == 1);
  CHECK(r["pure_nash"][0]["row"] == "Z");
  CHECK(r["pure_nash"][0]["col"] == "Z");
}

TEST_CASE("every subcommand runs with its defaults") {
  for (const auto& spec : command_specs()) {
    CAPTURE(spec.name);
    const RunOutcome j = run(manifest(spec.name, json::object(), 2));
    CHECK(j.exit_code == kExitOk);
    CHECK(j.error.empty());
    CHECK(json::accept(j.output));
    CHECK(run(manifest(spec.name, json::object(), 2, "table")).exit_code == kExitOk);
  }
}

TEST_CASE("identical manifests give byte-identical json") {
  for (const auto& spec : command_specs()) {
    CAPTURE(spec.name);
    const RunManifest m = manifest(spec.name, json::object(), 17);
    CHECK(run(m).output == run(m).output);
  }
  // The seed drives sampling: the players' answers differ across seeds.
  const json a = result_of(manifest("telepathy", {{"rounds", 1}}, 1));
  const json b = result_of(manifest("telepathy", {{"rounds", 1}}, 1));
  CHECK(a == b);
  std::set<std::string> outcomes;
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    outcomes.insert(result_of(manifest("telepathy", json::object(), seed))["last_round"]["details"]["y"].dump());
  CHECK(outcomes.size() > 1);
}

TEST_CASE("json output is key-sorted and echoes the manifest") {
  const RunOutcome r = run(manifest("bv", {{"secret", 6}}, 4));
  const json doc = json::parse(r.output);
  CHECK(doc["manifest"]["subcommand"] == "bv");
  CHECK(doc["manifest"]["seed"] == 4);
  CHECK(doc["manifest"]["params"]["n"] == 4);
  CHECK(doc["manifest"]["params"]["secret"] == 6);
  CHECK(doc["result"]["recovered"] == 6);
  CHECK(r.output == dump_json(doc));
  CHECK(r.output.find("\"manifest\"") < r.output.find("\"result\""));
}

TEST_CASE("table and json report the same numbers") {
  for (const auto& spec : command_specs()) {
    if (spec.name == "verify") continue;
    CAPTURE(spec.name);
    const json result = result_of(manifest(spec.name, json::object(), 3));
    const std::string table = run(manifest(spec.name, json::object(), 3, "table")).output;
    std::vector<std::string> want;
    collect_numbers(result, want);
    auto have = numeric_tokens(table);
    for (const auto& w : want) {
      CAPTURE(w);
      CHECK(have[w] > 0);
      --have[w];
    }
  }
}

TEST_CASE("exit codes") {
  CHECK(run(manifest("nope")).exit_code == kExitUsage);
  CHECK(run(manifest("grover", {{"bogus", 1}})).exit_code == kExitUsage);
  CHECK(run(manifest("grover", {{"n", "three"}})).exit_code == kExitUsage);
  CHECK(run(manifest("grover", json::object(), 0, "xml")).exit_code == kExitUsage);
  const RunOutcome domain = run(manifest("grover", {{"n", 3}, {"target", 9}}));
  CHECK(domain.exit_code == kExitDomain);
  CHECK_FALSE(domain.error.empty());
  CHECK(run(manifest("shor", {{"N", 13}})).exit_code == kExitDomain);
  CHECK(run(manifest("telepathy", {{"x", {1, 0, 0}}})).exit_code == kExitDomain);
  CHECK(run(manifest("telepathy", {{"x", std::vector<int>(18, 0)}})).exit_code == kExitResource);
  CHECK(run(manifest("grover", {{"n", 24}, {"target", 1}})).exit_code == kExitResource);
}

TEST_CASE("parameter parsing") {
  const CommandSpec* grover = find_command("grover");
  REQUIRE(grover != nullptr);
  CHECK(find_command("missing") == nullptr);
  const ParamSpec& n = grover->params[0];
  CHECK(parse_param(n, "12") == 12);
  CHECK_THROWS_AS(parse_param(n, "1.5"), UsageError);
  CHECK_THROWS_AS(parse_param(n, ""), UsageError);
  const ParamSpec list{"x", ParamKind::kIntList, nullptr, ""};
  CHECK(parse_param(list, "1,0,1") == json({1, 0, 1}));
  const ParamSpec reals{"r", ParamKind::kRealList, nullptr, ""};
  CHECK(parse_param(reals, "0.5,2") == json({0.5, 2.0}));
  CHECK_THROWS_AS(parse_param(reals, "0.5,x"), UsageError);
  const json p = normalize_params(*find_command("bos"), {{"alpha", 4}});
  CHECK(p["alpha"].is_number_float());
  CHECK(p["beta"] == 2.0);
  CHECK_FALSE(p.contains("forced"));
}

TEST_CASE("manifest parsing and default seed") {
  const RunManifest m = manifest_from_json({{"subcommand", "bv"}, {"params", {{"n", 3}}}, {"seed", 9}});
  CHECK(m.subcommand == "bv");
  CHECK(m.seed == 9);
  CHECK(m.format == "table");
  CHECK(to_json(m)["params"]["n"] == 3);
  CHECK_THROWS_AS(manifest_from_json({{"subcommand", "bv"}, {"extra", 1}}), UsageError);
  CHECK_THROWS_AS(manifest_from_json({{"params", json::object()}}), UsageError);
  CHECK_THROWS_AS(manifest_from_json({{"subcommand", "bv"}, {"seed", -1}}), UsageError);

  ::setenv("QUGAME_SEED", "42", 1);
  CHECK(default_seed() == 42);
  CHECK(manifest_from_json({{"subcommand", "bv"}}).seed == 42);
  ::setenv("QUGAME_SEED", "4x", 1);
  CHECK_THROWS_AS(default_seed(), UsageError);
  ::unsetenv("QUGAME_SEED");
  CHECK(default_seed() == 0);
}

TEST_CASE("verify passes and catches a perturbed payoff table") {
  const auto checks = verify_all();
  CHECK(checks.size() >= 25);
  for (const auto& c : checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed);
  }
  CHECK(run(manifest("verify")).exit_code == kExitOk);

  Eigen::MatrixXd a(2, 2), b(2, 2);
  a << 3, 0, 5, 1.5;
  b << 3, 5, 0, 1.5;
  VerifyOptions bad;
  bad.pd_payoffs = qugame::cgame::Bimatrix({"C", "D"}, {"C", "D"}, a, b);
  int pd_failures = 0;
  for (const auto& c : verify_all(bad)) {
    CAPTURE(c.name);
    if (c.name.rfind("pd.", 0) == 0) {
      pd_failures += c.passed ? 0 : 1;
    } else {
      CHECK(c.passed);
    }
  }
  CHECK(pd_failures >= 3);
}

TEST_CASE("command-line binary") {
  const std::string bin = QUGAME_BINARY;
  const auto dir = std::filesystem::temp_directory_path() / "qugame_cli_test";
  std::filesystem::create_directories(dir);
  const auto out = dir / "out.txt";

  CHECK(shell(bin + " grover --n 3 --target 5 > " + out.string()) == 0);
  CHECK(slurp(out).find("success: 0.9453") != std::string::npos);
  CHECK(shell(bin + " rsa --N 77 --e 11 --cipher 67 --seed 1 > " + out.string()) == 0);
  CHECK(slurp(out).find("plaintext: 23") != std::string::npos);
  CHECK(shell(bin + " frobnicate > /dev/null 2>&1") == kExitUsage);
  CHECK(shell(bin + " > /dev/null 2>&1") == kExitUsage);
  CHECK(shell(bin + " grover --n x > /dev/null 2>&1") == kExitUsage);
  CHECK(shell(bin + " grover --n 3 --target 8 > /dev/null 2>&1") == kExitDomain);
  CHECK(shell(bin + " --help > /dev/null") == 0);

  // Flags and an equivalent manifest give identical reports.
  CHECK(shell(bin + " newcomb --w 0.25 --coherent --format json --seed 5 --output " + out.string()) == 0);
  const std::string from_flags = slurp(out);
  const auto path = dir / "manifest.json";
  std::ofstream(path) << json{{"subcommand", "newcomb"},
                              {"params", {{"w", 0.25}, {"coherent", true}}},
                              {"seed", 5},
                              {"format", "json"}}
                             .dump();
  CHECK(shell(bin + " --manifest " + path.string() + " --output " + out.string()) == 0);
  const std::string from_manifest = slurp(out);
  CHECK(json::parse(from_flags)["result"] == json::parse(from_manifest)["result"]);
  CHECK(shell(bin + " --manifest " + (dir / "missing.json").string() + " > /dev/null 2>&1") == kExitUsage);
  CHECK(shell("QUGAME_SEED=1 " + bin + " rsa --N 77 --e 11 --cipher 67 --format json > " + out.string()) == 0);
  CHECK(json::parse(slurp(out))["manifest"]["seed"] == 1);
  std::filesystem::remove_all(dir);
}
