#include "qugame/qgames/telepathy.hpp"

#include "qugame/errors.hpp"
#include "qugame/qstate/gates.hpp"

namespace qugame::qgames {

bool telepathy_wins(const std::vector<int>& x, const std::vector<int>& y) {
  int sx = 0, sy = 0;
  for (int v : x) sx += v;
  for (int v : y) sy += v;
  return sy % 2 == (sx / 2) % 2;
}

TelepathyRound pseudo_telepathy_round(const std::vector<int>& x, qstate::RandomSource& rng,
                                      std::optional<std::uint64_t> forced) {
  const int n = static_cast<int>(x.size());
  if (n < 2) throw DomainError("the game needs at least two players");
  if (n > kMaxTelepathyPlayers) throw ResourceError("pseudo-telepathy is capped at 16 players");
  int sum = 0;
  for (int v : x) {
    if (v != 0 && v != 1) throw DomainError("inputs are bits");
    sum += v;
  }
  if (sum % 2 != 0) throw DomainError("the inputs must have an even sum");

  TelepathyRound round;
  round.x = x;
  GameReport& report = round.report;
  report.game = "telepathy";
  report.params = {{"x", x}};
  Recorder rec(report, qstate::bell_basis(n)[0]);
  const UnitaryMatrix s = qstate::standard_gate(qstate::Gate::kQuarterPhase);
  for (int i = 0; i < n; ++i) {
    if (x[static_cast<std::size_t>(i)] == 1) rec.apply("A" + std::to_string(i + 1), "apply diag(1, i)", s, {i});
  }
  const UnitaryMatrix h = qstate::hadamard();
  for (int i = 0; i < n; ++i) rec.apply("A" + std::to_string(i + 1), "apply H", h, {i});
  rec.finish();
  std::optional<int> f;
  if (forced) f = static_cast<int>(*forced);
  const auto m = qstate::measure_computational(rec.state(), rng, f);
  rec.note("all", "measure -> " + m.outcome_label);
  round.y = qstate::digits_of(rec.state().dims(), static_cast<std::size_t>(m.outcome_index));
  round.win = telepathy_wins(x, round.y);
  report.outcome = round.win ? "win" : "lose";
  report.details["y"] = round.y;
  const double pay = round.win ? 1.0 : -1.0;
  for (int i = 0; i < n; ++i) report.payoffs["A" + std::to_string(i + 1)] = pay;
  return round;
}

}  // namespace qugame::qgames
