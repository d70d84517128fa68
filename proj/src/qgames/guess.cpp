#include "qugame/qgames/guess.hpp"

#include "qugame/errors.hpp"
#include "qugame/qalgo/bernstein_vazirani.hpp"
#include "qugame/qalgo/grover.hpp"

namespace qugame::qgames {

namespace {

constexpr int kKeepTrajectoryUpTo = 12;

}  // namespace

GameReport guess_number_game(GuessVariant variant, int n, std::uint64_t a, qstate::RandomSource& rng) {
  GameReport report;
  report.params = {{"n", n}, {"secret", a}};
  std::uint64_t guess = 0;
  double win = 0.0;
  if (variant == GuessVariant::kGrover) {
    report.game = "guess-I";
    qalgo::GroverOptions opt;
    opt.keep_trajectory = n <= kKeepTrajectoryUpTo;
    const qalgo::GroverRun run = qalgo::grover_search(n, a, opt);
    report.transcript.push_back({"Bob", "prepare W|0...0>", {}, std::nullopt, {}, {}, -1, ""});
    for (int k = 1; k <= run.iterations; ++k) {
      Step s{"Alice/Bob", "oracle R_a then diffusion R_s, rotation " + std::to_string(k), {}, std::nullopt, {}, {}, -1,
             "target probability " + std::to_string(run.target_probability[static_cast<std::size_t>(k)])};
      report.transcript.push_back(std::move(s));
    }
    const StateVector& final_state = run.trajectory.back();
    guess = qstate::measure_computational(final_state, rng).outcome_index;
    win = run.success_probability;
    report.details["iterations"] = run.iterations;
    report.details["theta"] = run.theta;
    report.details["oracle_calls"] = run.iterations;
  } else {
    report.game = "guess-II";
    const qalgo::BvResult r = qalgo::bernstein_vazirani(n, a, rng);
    report.transcript.push_back({"Bob", "prepare W|0...0>", {}, std::nullopt, {}, {}, -1, ""});
    report.transcript.push_back({"Alice", "answer the dot-product query", {}, std::nullopt, {}, {}, -1, ""});
    report.transcript.push_back({"Bob", "apply W and measure", {}, std::nullopt, {}, {}, -1, ""});
    guess = r.recovered;
    win = r.probability;
    report.details["oracle_calls"] = r.oracle_calls;
  }
  report.details["guess"] = guess;
  report.outcome = guess == a ? "Bob wins" : "Alice wins";
  const double bob = guess == a ? 1.0 : -1.0;
  report.payoffs = {{"alice", -bob}, {"bob", bob}};
  report.probabilities = {{"win", win}, {"lose", 1.0 - win}};
  return report;
}

}  // namespace qugame::qgames
