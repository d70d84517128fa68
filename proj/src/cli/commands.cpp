#include "qugame/cli/commands.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "qugame/cgame.hpp"
#include "qugame/cli/render.hpp"
#include "qugame/cli/verify.hpp"
#include "qugame/density.hpp"
#include "qugame/errors.hpp"
#include "qugame/qalgo.hpp"
#include "qugame/qgames.hpp"
#include "qugame/qstate.hpp"

namespace qugame::cli {

namespace {

using nlohmann::json;
using qstate::RandomSource;
using qstate::StateVector;
using qstate::UnitaryMatrix;

constexpr ParamKind kInt = ParamKind::kInt;
constexpr ParamKind kReal = ParamKind::kReal;
constexpr ParamKind kStr = ParamKind::kString;
constexpr ParamKind kBool = ParamKind::kBool;
constexpr ParamKind kInts = ParamKind::kIntList;
constexpr ParamKind kReals = ParamKind::kRealList;
constexpr ParamKind kStrs = ParamKind::kStringList;

std::vector<ParamSpec> bloch_params(double theta, double phi) {
  return {{"theta", kReal, theta, "polar Bloch angle of the input state"},
          {"phi", kReal, phi, "azimuthal Bloch angle of the input state"}};
}

std::vector<ParamSpec> with(std::vector<ParamSpec> a, const std::vector<ParamSpec>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<CommandSpec> build_specs() {
  const json none;
  const ParamSpec forced{"forced", kInt, none, "force this measurement outcome index"};
  return {
      {"grover", "Grover search for one marked entry",
       {{"n", kInt, 3, "register qubits"},
        {"target", kInt, 5, "marked index"},
        {"iterations", kInt, none, "rotation count (default: optimal)"}}},
      {"bv", "Bernstein-Vazirani recovery of a dot-product mask",
       {{"n", kInt, 4, "register qubits"}, {"secret", kInt, 11, "mask a"}}},
      {"shor", "Shor factoring with simulated order finding",
       {{"N", kInt, 77, "modulus"},
        {"base", kInt, none, "first base tried"},
        {"max-rounds", kInt, 25, "retry budget"}}},
      {"rsa", "Break an RSA ciphertext by factoring the modulus",
       {{"N", kInt, 77, "modulus"},
        {"e", kInt, 11, "public exponent"},
        {"cipher", kInt, 67, "ciphertext"},
        {"base", kInt, none, "first base tried"},
        {"max-rounds", kInt, 25, "retry budget"}}},
      {"spinflip", "Spin flip game: Bob, Alice, Bob act on one electron",
       {{"bob1", kStr, "H", "Bob's first move"},
        {"alice", kStr, "X", "Alice's move"},
        {"bob2", kStr, "H", "Bob's second move"},
        {"initial", kStr, "u", "initial spin u or d"},
        {"alice-mix", kReal, none, "probability Alice plays I; reports her exact expected payoff"},
        forced}},
      {"guess", "Guess-a-number game",
       {{"variant", kStr, "I", "I (Grover) or II (Bernstein-Vazirani)"},
        {"n", kInt, 3, "register qubits"},
        {"secret", kInt, 5, "Alice's number"}}},
      {"pd", "One round of the quantum prisoner's dilemma",
       {{"alice", kStr, "H", "Alice's move"}, {"bob", kStr, "H", "Bob's move"}, forced}},
      {"bos", "One round of the quantum battle of the sexes",
       {{"alpha", kReal, 3.0, "alpha"},
        {"beta", kReal, 2.0, "beta"},
        {"gamma", kReal, 1.0, "gamma"},
        {"alice", kStr, "X", "Alice's move"},
        {"bob", kStr, "X", "Bob's move"},
        forced}},
      {"newcomb", "Quantum Newcomb game",
       {{"sb", kInt, 1, "superior being's prediction (0 or 1)"},
        {"w", kReal, 0.5, "probability Alice flips her qubit"},
        {"coherent", kBool, false, "apply w X + (1 - w) I to the amplitudes directly"}}},
      {"ess", "Evolutionary stability in the quantum prisoner's dilemma",
       {{"moves", kStrs, json::array({"I", "X", "H", "Z"}), "move set"},
        {"eta", kReal, 0.01, "mutant share"}}},
      {"card", "Quantum card game round",
       {{"faces", kInts, json::array({0, 1, 1}), "up faces r0,r1,r2"},
        {"draw", kInt, 1, "position Bob draws"},
        {"mixed", kInt, none, "position of the mixed card"}}},
      {"telepathy", "Pseudo-telepathy game rounds",
       {{"x", kInts, json::array({1, 1, 0, 0}), "input bits (even sum)"},
        {"rounds", kInt, 1, "rounds to play"}}},
      {"teleport", "Teleport one qubit", with(bloch_params(1.0, 0.5), {{"bell", kInt, none, "force Alice's Bell outcome"}})},
      {"secret-qubit", "Share a qubit secret between Bob and Gerald",
       with(bloch_params(1.0, 0.5),
            {{"bell", kInt, none, "force Alice's Bell outcome"}, {"bob", kInt, none, "force Bob's x-basis outcome"}})},
      {"secret-qutrit", "Threshold sharing of a qutrit secret",
       {{"amps", kReals, json::array({0.6, 0.0, 0.8}), "secret amplitudes a,b,c"},
        {"pair", kStr, "alice-bob", "alice-bob, bob-gerald or alice-gerald"}}},
      {"estimate", "State estimation game",
       with(bloch_params(1.0, 0.0),
            {{"shots", kInt, 1000, "copies measured"}, {"threshold", kReal, 0.95, "fidelity Bob must reach"}})},
      {"discriminate", "Bayesian discrimination of two qubit states",
       {{"thetas", kReals, json::array({0.0, std::numbers::pi / 2}), "polar angles of the candidate states"},
        {"priors", kReals, json::array({0.5, 0.5}), "prior probabilities"},
        {"cost", kReal, 1.0, "cost of a wrong guess"},
        {"basis-angle", kReal, std::numbers::pi / 4, "polar angle of the first measurement vector"}}},
      {"clone", "Universal quantum cloning machine", bloch_params(1.0, 0.5)},
      {"tables", "Payoff tables and their equilibria",
       {{"game", kStr, "pd", "pd, bos, pd-classical, bos-classical, spinflip or newcomb"},
        {"moves", kStrs, json::array({"I", "X", "H", "Z"}), "quantum move set for pd and bos"},
        {"alpha", kReal, 3.0, "battle of the sexes alpha"},
        {"beta", kReal, 2.0, "battle of the sexes beta"},
        {"gamma", kReal, 1.0, "battle of the sexes gamma"}}},
      {"verify", "Recompute every published golden value", {}},
  };
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) parts.push_back(cur);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

std::int64_t parse_int(const std::string& text, const std::string& name) {
  std::int64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) throw UsageError("--" + name + " expects an integer, got '" + text + "'");
  return v;
}

double parse_real(const std::string& text, const std::string& name) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size() || !std::isfinite(v))
    throw UsageError("--" + name + " expects a number, got '" + text + "'");
  return v;
}

bool type_ok(ParamKind kind, const json& v) {
  auto each = [&](auto pred) { return v.is_array() && std::all_of(v.begin(), v.end(), pred); };
  switch (kind) {
    case ParamKind::kInt: return v.is_number_integer();
    case ParamKind::kReal: return v.is_number();
    case ParamKind::kString: return v.is_string();
    case ParamKind::kBool: return v.is_boolean();
    case ParamKind::kIntList: return each([](const json& e) { return e.is_number_integer(); });
    case ParamKind::kRealList: return each([](const json& e) { return e.is_number(); });
    case ParamKind::kStringList: return each([](const json& e) { return e.is_string(); });
  }
  return false;
}

// Typed parameter access after normalization.

std::int64_t get_int(const json& p, const char* name) { return p.at(name).get<std::int64_t>(); }

std::uint64_t get_u64(const json& p, const char* name) {
  const std::int64_t v = get_int(p, name);
  if (v < 0) throw DomainError(std::string(name) + " must be non-negative");
  return static_cast<std::uint64_t>(v);
}

int get_small(const json& p, const char* name) {
  const std::int64_t v = get_int(p, name);
  if (v < -1'000'000'000 || v > 1'000'000'000) throw DomainError(std::string(name) + " is out of range");
  return static_cast<int>(v);
}

std::optional<int> get_opt_int(const json& p, const char* name) {
  if (!p.contains(name)) return std::nullopt;
  return get_small(p, name);
}

std::optional<std::uint64_t> get_opt_u64(const json& p, const char* name) {
  if (!p.contains(name)) return std::nullopt;
  return get_u64(p, name);
}

double get_real(const json& p, const char* name) { return p.at(name).get<double>(); }
std::string get_str(const json& p, const char* name) { return p.at(name).get<std::string>(); }

UnitaryMatrix gate(const json& p, const char* name) {
  return qstate::standard_gate(qstate::gate_from_name(get_str(p, name)));
}

StateVector bloch_state(const json& p) {
  const double theta = get_real(p, "theta");
  const double phi = get_real(p, "phi");
  return qstate::qubit(std::cos(theta / 2), std::polar(std::sin(theta / 2), phi));
}

json cell_list(const cgame::Bimatrix& g, const std::vector<cgame::Cell>& cells) {
  json out = json::array();
  for (const auto& c : cells)
    out.push_back({{"row", g.row_labels()[static_cast<std::size_t>(c.row)]},
                   {"col", g.col_labels()[static_cast<std::size_t>(c.col)]},
                   {"payoffs", {g.a()(c.row, c.col), g.b()(c.row, c.col)}}});
  return out;
}

json mixed_json(const cgame::MixedNash& m) {
  json j{{"interior", m.interior}};
  if (m.interior) {
    j["p"] = m.p;
    j["q"] = m.q;
    j["payoffs"] = {m.payoff_a, m.payoff_b};
  } else {
    j["note"] = m.note;
  }
  return j;
}

json analysis_json(const cgame::Bimatrix& g) {
  json j;
  j["table"] = bimatrix_json(g);
  j["pure_nash"] = cell_list(g, cgame::pure_nash(g));
  std::vector<cgame::Cell> optimal;
  const auto flags = cgame::pareto_analysis(g);
  for (int r = 0; r < g.rows(); ++r)
    for (int c = 0; c < g.cols(); ++c)
      if (flags[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].pareto_optimal) optimal.push_back({r, c});
  j["pareto_optimal"] = cell_list(g, optimal);
  const auto dom = cgame::dominant_moves(g);
  json rows = json::array();
  json cols = json::array();
  for (int r : dom.row) rows.push_back(g.row_labels()[static_cast<std::size_t>(r)]);
  for (int c : dom.col) cols.push_back(g.col_labels()[static_cast<std::size_t>(c)]);
  j["dominant"] = {{"row", rows}, {"col", cols}};
  if (g.rows() == 2 && g.cols() == 2) j["mixed_nash"] = mixed_json(cgame::mixed_nash_2x2(g));
  if (g.is_zero_sum()) {
    try {
      const auto s = cgame::zero_sum_value_2x2(g);
      j["zero_sum"] = {{"value", s.value}, {"row_strategy", s.row.probs()}, {"col_strategy", s.col.probs()}};
    } catch (const DomainError&) {
      // Larger than 2x2 after merging; no closed-form value.
    }
  }
  return j;
}

json fraction_text(const qalgo::Fraction& f) { return std::to_string(f.num) + "/" + std::to_string(f.den); }

json shor_json(const qalgo::ShorResult& r) {
  json j{{"modulus", r.modulus}, {"success", r.success}, {"factors", r.factors}, {"rounds", r.rounds}};
  if (!r.classical_exit.empty()) j["classical_exit"] = r.classical_exit;
  json rounds = json::array();
  for (const auto& round : r.transcript) {
    json e{{"round", round.round}, {"base", round.base}, {"kind", round.kind}, {"factors", round.factors}};
    if (round.sample) {
      const auto& s = *round.sample;
      json sample{{"width", s.width},
                  {"q", s.q},
                  {"observed_residue", s.observed_residue},
                  {"w", s.w},
                  {"probability", s.probability},
                  {"candidate", fraction_text(s.candidate)}};
      if (s.recovered) sample["recovered"] = fraction_text(*s.recovered);
      e["sample"] = std::move(sample);
    }
    if (round.attempt) e["attempt"] = {{"status", qalgo::to_string(round.attempt->status)}, {"steps", round.attempt->steps}};
    rounds.push_back(std::move(e));
  }
  j["transcript"] = std::move(rounds);
  return j;
}

json protocol_json(const qgames::ProtocolResult& r) {
  json j = qgames::to_json(r.report);
  j["recovered"] = state_json(r.recovered);
  j["overlap"] = r.overlap;
  return j;
}

json bloch_json(const density::BlochVector& b) { return {b.x, b.y, b.z}; }

json cmd_grover(const json& p) {
  const int n = get_small(p, "n");
  qalgo::GroverOptions opt;
  opt.iterations = get_opt_int(p, "iterations");
  opt.keep_trajectory = n <= 4;
  const auto run = qalgo::grover_search(n, get_u64(p, "target"), opt);
  json j{{"n", run.n},
         {"target", run.target},
         {"k", run.iterations},
         {"theta", run.theta},
         {"success", run.success_probability},
         {"target_probability", run.target_probability}};
  if (!run.trajectory.empty()) {
    json amps = json::array();
    for (const auto& s : run.trajectory) amps.push_back(state_json(s)["amplitudes"]);
    j["amplitudes"] = std::move(amps);
  }
  return j;
}

json cmd_bv(const json& p, RandomSource& rng) {
  const std::uint64_t a = get_u64(p, "secret");
  const auto r = qalgo::bernstein_vazirani(get_small(p, "n"), a, rng);
  return {{"secret", a},
          {"recovered", r.recovered},
          {"oracle_calls", r.oracle_calls},
          {"probability", r.probability},
          {"success", r.recovered == a}};
}

json cmd_shor(const json& p, RandomSource& rng) {
  return shor_json(qalgo::shor_factor(get_u64(p, "N"), rng, get_small(p, "max-rounds"), get_opt_u64(p, "base")));
}

json cmd_rsa(const json& p, RandomSource& rng) {
  const auto r = qalgo::rsa_demo(get_u64(p, "N"), get_u64(p, "e"), get_u64(p, "cipher"), rng,
                                 get_small(p, "max-rounds"), get_opt_u64(p, "base"));
  return {{"p", r.p}, {"q", r.q}, {"phi", r.phi}, {"d", r.d}, {"plaintext", r.plaintext}, {"shor", shor_json(r.shor)}};
}

json cmd_spinflip(const json& p, RandomSource& rng) {
  const std::string init = get_str(p, "initial");
  if (init != "u" && init != "d") throw DomainError("initial spin must be u or d");
  const StateVector start = init == "u" ? qgames::spin_up() : qgames::spin_down();
  const auto bob1 = gate(p, "bob1");
  const auto bob2 = gate(p, "bob2");
  json j = qgames::to_json(qgames::spin_flip_play(bob1, gate(p, "alice"), bob2, rng, start, get_opt_int(p, "forced")));
  if (p.contains("alice-mix")) {
    const double w = get_real(p, "alice-mix");
    j["mixed_expected_alice"] = qgames::spin_flip_expected(cgame::MixedStrategy({w, 1.0 - w}), bob1, bob2, start);
  }
  return j;
}

json cmd_guess(const json& p, RandomSource& rng) {
  const std::string v = get_str(p, "variant");
  qgames::GuessVariant variant;
  if (v == "I" || v == "grover") {
    variant = qgames::GuessVariant::kGrover;
  } else if (v == "II" || v == "bv") {
    variant = qgames::GuessVariant::kBernsteinVazirani;
  } else {
    throw DomainError("guess variant must be I or II");
  }
  return qgames::to_json(qgames::guess_number_game(variant, get_small(p, "n"), get_u64(p, "secret"), rng));
}

json ewl_json(const std::string& game, const json& p, const cgame::Bimatrix& payoffs, RandomSource& rng) {
  const std::string a = get_str(p, "alice");
  const std::string b = get_str(p, "bob");
  return qgames::to_json(qgames::ewl_round(game, a, gate(p, "alice"), b, gate(p, "bob"), payoffs, rng,
                                          get_opt_int(p, "forced")));
}

json cmd_bos(const json& p, RandomSource& rng) {
  const double al = get_real(p, "alpha");
  const double be = get_real(p, "beta");
  const double ga = get_real(p, "gamma");
  const auto classical = cgame::battle_of_sexes(al, be, ga);
  json j = ewl_json("bos", p, classical, rng);
  j["classical_mixed"] = mixed_json(cgame::mixed_nash_2x2(classical));
  j["quantum_mixed"] = mixed_json(qgames::quantum_bos_mixed(al, be, ga));
  return j;
}

json cmd_newcomb(const json& p) {
  return qgames::to_json(qgames::newcomb_play(get_small(p, "sb"), get_real(p, "w"), p.at("coherent").get<bool>()));
}

json cmd_ess(const json& p) {
  const auto moves = qgames::move_set(p.at("moves").get<std::vector<std::string>>());
  const auto table = qgames::ewl_table(moves, cgame::prisoners_dilemma());
  const double eta = get_real(p, "eta");
  json pairs = json::array();
  json ess = json::object();
  for (int i = 0; i < table.rows(); ++i) {
    for (int k = 0; k < table.rows(); ++k) {
      if (i == k) continue;
      const auto r = cgame::ess_test(table, i, k, eta);
      pairs.push_back({{"incumbent", moves.labels[static_cast<std::size_t>(i)]},
                       {"mutant", moves.labels[static_cast<std::size_t>(k)]},
                       {"fitness_incumbent", r.fitness_incumbent},
                       {"fitness_mutant", r.fitness_mutant},
                       {"stable_at_eta", r.stable_at_eta},
                       {"stable", r.stable},
                       {"invasion_barrier", r.invasion_barrier}});
    }
    ess[moves.labels[static_cast<std::size_t>(i)]] = cgame::is_ess(table, i);
  }
  return {{"table", bimatrix_json(table)}, {"eta", eta}, {"pairs", pairs}, {"ess", ess}};
}

json cmd_card(const json& p, RandomSource& rng) {
  const auto faces = p.at("faces").get<std::vector<std::int64_t>>();
  if (faces.size() != 3) throw DomainError("the box holds three cards");
  std::array<int, 3> r{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (faces[i] != 0 && faces[i] != 1) throw DomainError("faces are 0 (circle) or 1 (dot)");
    r[i] = static_cast<int>(faces[i]);
  }
  json j = qgames::to_json(qgames::card_game_round(r, get_small(p, "draw"), rng, get_opt_int(p, "mixed")));
  const auto e = qgames::card_game_enumeration();
  j["enumeration"] = {{"cases", e.cases}, {"total", e.total}, {"mean", e.mean}};
  return j;
}

json cmd_telepathy(const json& p, RandomSource& rng) {
  std::vector<int> x;
  for (auto v : p.at("x").get<std::vector<std::int64_t>>()) {
    if (v != 0 && v != 1) throw DomainError("inputs are bits");
    x.push_back(static_cast<int>(v));
  }
  const int rounds = get_small(p, "rounds");
  if (rounds < 1) throw DomainError("rounds must be positive");
  int wins = 0;
  json last;
  for (int i = 0; i < rounds; ++i) {
    auto round = qgames::pseudo_telepathy_round(x, rng);
    wins += round.win ? 1 : 0;
    if (i + 1 == rounds) last = qgames::to_json(round.report);
  }
  return {{"rounds", rounds}, {"wins", wins}, {"win_rate", static_cast<double>(wins) / rounds}, {"last_round", last}};
}

json cmd_secret_qutrit(const json& p) {
  const auto amps = p.at("amps").get<std::vector<double>>();
  if (amps.size() != 3) throw DomainError("a qutrit secret has three amplitudes");
  Eigen::VectorXcd v(3);
  for (int i = 0; i < 3; ++i) v[i] = amps[static_cast<std::size_t>(i)];
  const auto secret = StateVector::normalized({3}, v);
  return protocol_json(qgames::secret_share_qutrit(secret, qgames::share_pair_from_name(get_str(p, "pair"))));
}

json cmd_estimate(const json& p, RandomSource& rng) {
  return qgames::to_json(qgames::estimation_game(bloch_state(p), get_int(p, "shots"), get_real(p, "threshold"), rng));
}

json cmd_discriminate(const json& p) {
  const auto thetas = p.at("thetas").get<std::vector<double>>();
  const auto priors = p.at("priors").get<std::vector<double>>();
  if (thetas.size() != priors.size()) throw DomainError("one prior per candidate state");
  std::vector<density::DensityMatrix> states;
  for (double t : thetas) states.push_back(density::DensityMatrix::pure(qstate::qubit(std::cos(t / 2), std::sin(t / 2))));
  const double b = get_real(p, "basis-angle");
  const std::vector<StateVector> basis{qstate::qubit(std::cos(b / 2), std::sin(b / 2)),
                                       qstate::qubit(-std::sin(b / 2), std::cos(b / 2))};
  density::DiscriminationProblem prob{priors, states,
                                      density::constant_cost(static_cast<int>(states.size()), get_real(p, "cost")),
                                      density::channel_from_measurement(states, basis)};
  const auto r = density::discrimination_cost(prob);
  json channel = json::array();
  for (Eigen::Index m = 0; m < prob.channel.rows(); ++m) {
    json row = json::array();
    for (Eigen::Index k = 0; k < prob.channel.cols(); ++k) row.push_back(prob.channel(m, k));
    channel.push_back(std::move(row));
  }
  return {{"bayes_cost", r.bayes_cost}, {"error_probability", r.error_probability}, {"channel", channel}};
}

json cmd_clone(const json& p) {
  const StateVector psi = bloch_state(p);
  const auto r = density::uqcm_clone(psi);
  return {{"input_bloch", bloch_json(density::to_bloch(density::DensityMatrix::pure(psi)))},
          {"clone_bloch", bloch_json(density::to_bloch(r.clone_a))},
          {"clone", matrix_json(r.clone_a.matrix())},
          {"fidelity", r.fidelity},
          {"eta", r.eta}};
}

json cmd_tables(const json& p) {
  const std::string game = get_str(p, "game");
  const auto moves = [&] { return qgames::move_set(p.at("moves").get<std::vector<std::string>>()); };
  const auto bos = [&] { return cgame::battle_of_sexes(get_real(p, "alpha"), get_real(p, "beta"), get_real(p, "gamma")); };
  json j;
  if (game == "pd") {
    j = analysis_json(qgames::ewl_table(moves(), cgame::prisoners_dilemma()));
  } else if (game == "bos") {
    j = analysis_json(qgames::ewl_table(moves(), bos()));
    j["quantum_mixed"] = mixed_json(qgames::quantum_bos_mixed(get_real(p, "alpha"), get_real(p, "beta"), get_real(p, "gamma")));
  } else if (game == "pd-classical") {
    j = analysis_json(cgame::prisoners_dilemma());
  } else if (game == "bos-classical") {
    j = analysis_json(bos());
  } else if (game == "spinflip") {
    j = analysis_json(qgames::spin_flip_table(qgames::spin_up()));
  } else if (game == "newcomb") {
    j = analysis_json(qgames::newcomb_table());
  } else {
    throw DomainError("unknown table game: " + game);
  }
  j["game"] = game;
  return j;
}

json cmd_verify() {
  json checks = json::array();
  int failed = 0;
  for (const auto& c : verify_all()) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    failed += c.passed ? 0 : 1;
  }
  const int total = static_cast<int>(checks.size());
  return {{"checks", checks}, {"passed", total - failed}, {"failed", failed}};
}

}  // namespace

const std::vector<CommandSpec>& command_specs() {
  static const std::vector<CommandSpec> specs = build_specs();
  return specs;
}

const CommandSpec* find_command(const std::string& name) {
  for (const auto& s : command_specs())
    if (s.name == name) return &s;
  return nullptr;
}

nlohmann::json parse_param(const ParamSpec& spec, const std::string& text) {
  switch (spec.kind) {
    case ParamKind::kInt: return parse_int(text, spec.name);
    case ParamKind::kReal: return parse_real(text, spec.name);
    case ParamKind::kString: return text;
    case ParamKind::kBool:
      if (text == "true" || text == "1") return true;
      if (text == "false" || text == "0") return false;
      throw UsageError("--" + spec.name + " expects true or false");
    case ParamKind::kIntList: {
      json out = json::array();
      for (const auto& part : split(text)) out.push_back(parse_int(part, spec.name));
      return out;
    }
    case ParamKind::kRealList: {
      json out = json::array();
      for (const auto& part : split(text)) out.push_back(parse_real(part, spec.name));
      return out;
    }
    case ParamKind::kStringList: {
      json out = json::array();
      for (const auto& part : split(text)) out.push_back(part);
      return out;
    }
  }
  throw UsageError("unhandled parameter kind");
}

nlohmann::json normalize_params(const CommandSpec& spec, const nlohmann::json& given) {
  if (!given.is_object()) throw UsageError("params must be an object");
  for (const auto& [key, value] : given.items()) {
    const auto it = std::find_if(spec.params.begin(), spec.params.end(), [&](const ParamSpec& s) { return s.name == key; });
    if (it == spec.params.end()) throw UsageError(spec.name + " has no parameter '" + key + "'");
    if (!type_ok(it->kind, value)) throw UsageError("parameter '" + key + "' has the wrong type");
  }
  json out = json::object();
  for (const auto& s : spec.params) {
    if (given.contains(s.name)) {
      out[s.name] = given[s.name];
    } else if (!s.fallback.is_null()) {
      out[s.name] = s.fallback;
    }
    // Reals given as integers are stored as doubles so output types stay stable.
    if (out.contains(s.name) && s.kind == ParamKind::kReal) out[s.name] = out[s.name].get<double>();
    if (out.contains(s.name) && s.kind == ParamKind::kRealList) out[s.name] = out[s.name].get<std::vector<double>>();
  }
  return out;
}

nlohmann::json execute(const RunManifest& m) {
  const json& p = m.params;
  RandomSource rng(m.seed);
  const std::string& c = m.subcommand;
  if (c == "grover") return cmd_grover(p);
  if (c == "bv") return cmd_bv(p, rng);
  if (c == "shor") return cmd_shor(p, rng);
  if (c == "rsa") return cmd_rsa(p, rng);
  if (c == "spinflip") return cmd_spinflip(p, rng);
  if (c == "guess") return cmd_guess(p, rng);
  if (c == "pd") return ewl_json("pd", p, cgame::prisoners_dilemma(), rng);
  if (c == "bos") return cmd_bos(p, rng);
  if (c == "newcomb") return cmd_newcomb(p);
  if (c == "ess") return cmd_ess(p);
  if (c == "card") return cmd_card(p, rng);
  if (c == "telepathy") return cmd_telepathy(p, rng);
  if (c == "teleport") return protocol_json(qgames::teleport(bloch_state(p), rng, get_opt_int(p, "bell")));
  if (c == "secret-qubit")
    return protocol_json(qgames::secret_share_qubit(bloch_state(p), rng, get_opt_int(p, "bell"), get_opt_int(p, "bob")));
  if (c == "secret-qutrit") return cmd_secret_qutrit(p);
  if (c == "estimate") return cmd_estimate(p, rng);
  if (c == "discriminate") return cmd_discriminate(p);
  if (c == "clone") return cmd_clone(p);
  if (c == "tables") return cmd_tables(p);
  if (c == "verify") return cmd_verify();
  throw UsageError("unknown subcommand: " + c);
}

RunOutcome run(const RunManifest& m) {
  RunOutcome out;
  try {
    const CommandSpec* spec = find_command(m.subcommand);
    if (spec == nullptr) throw UsageError("unknown subcommand: " + m.subcommand);
    if (m.format != "table" && m.format != "json") throw UsageError("format must be table or json");
    RunManifest norm = m;
    norm.params = normalize_params(*spec, m.params);
    const json result = execute(norm);
    if (m.format == "json") {
      out.output = dump_json({{"manifest", to_json(norm)}, {"result", result}});
    } else {
      out.output = "qugame " + norm.subcommand + " (seed " + std::to_string(norm.seed) + ")\n" + render_table(result);
    }
    if (norm.subcommand == "verify" && result.at("failed").get<int>() > 0) out.exit_code = kExitCheckFailed;
    if (!m.output.empty()) {
      std::ofstream file(m.output);
      if (!file || !(file << out.output)) throw UsageError("cannot write " + m.output);
    }
  } catch (const UsageError& e) {
    out = {kExitUsage, "", e.what()};
  } catch (const DomainError& e) {
    out = {kExitDomain, "", e.what()};
  } catch (const ResourceError& e) {
    out = {kExitResource, "", e.what()};
  }
  return out;
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Quantum game theory simulations"};
  app.fallthrough();
  std::string seed_text;
  std::string format;
  std::string output;
  std::string manifest_path;
  app.add_option("--seed", seed_text, "RNG seed (default: QUGAME_SEED or 0)");
  app.add_option("--format", format, "table or json");
  app.add_option("--output", output, "write the report to this file");
  app.add_option("--manifest", manifest_path, "run a JSON manifest {subcommand, params, seed, format, output}");

  struct Bound {
    const ParamSpec* spec;
    CLI::Option* option;
    std::string text;
    bool flag = false;
  };
  std::vector<std::pair<CLI::App*, std::vector<std::unique_ptr<Bound>>>> subs;
  for (const auto& spec : command_specs()) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    std::vector<std::unique_ptr<Bound>> bound;
    for (const auto& p : spec.params) {
      auto b = std::make_unique<Bound>();
      b->spec = &p;
      std::string help = p.help;
      if (!p.fallback.is_null()) help += " [" + (p.fallback.is_string() ? p.fallback.get<std::string>() : p.fallback.dump()) + "]";
      if (p.kind == ParamKind::kBool) {
        b->option = sub->add_flag("--" + p.name, b->flag, help);
      } else {
        b->option = sub->add_option("--" + p.name, b->text, help);
      }
      bound.push_back(std::move(b));
    }
    subs.emplace_back(sub, std::move(bound));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  RunManifest m;
  try {
    CLI::App* chosen = nullptr;
    for (auto& [sub, bound] : subs)
      if (sub->parsed()) chosen = sub;
    if (!manifest_path.empty()) {
      if (chosen != nullptr) throw UsageError("give either a subcommand or --manifest, not both");
      m = load_manifest(manifest_path);
    } else if (chosen == nullptr) {
      throw UsageError("missing subcommand; run with --help for the list");
    } else {
      m.subcommand = chosen->get_name();
      m.seed = default_seed();
      for (auto& [sub, bound] : subs) {
        if (sub != chosen) continue;
        for (auto& b : bound) {
          if (b->option->count() == 0) continue;
          m.params[b->spec->name] = b->spec->kind == ParamKind::kBool ? json(b->flag) : parse_param(*b->spec, b->text);
        }
      }
    }
    if (!seed_text.empty()) m.seed = parse_seed(seed_text, "--seed");
    if (!format.empty()) m.format = format;
    if (!output.empty()) m.output = output;
  } catch (const UsageError& e) {
    std::cerr << "qugame: " << e.what() << "\n";
    return kExitUsage;
  }

  const RunOutcome r = run(m);
  if (!r.error.empty()) std::cerr << "qugame: " << r.error << "\n";
  if (m.output.empty()) std::cout << r.output;
  return r.exit_code;
}

}  // namespace qugame::cli
