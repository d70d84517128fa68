#include "qugame/qgames/spin_flip.hpp"

#include "qugame/errors.hpp"
#include "qugame/qstate/gates.hpp"

namespace qugame::qgames {

namespace {

void check_single(const UnitaryMatrix& u) {
  if (u.dim() != 2) throw DomainError("spin flip moves act on one qubit");
}

// Probability that the electron ends spin down.
double down_probability(const StateVector& initial, const UnitaryMatrix& bob1, const UnitaryMatrix& alice,
                        const UnitaryMatrix& bob2) {
  const StateVector s = qstate::apply(qstate::apply(qstate::apply(initial, bob1), alice), bob2);
  return std::norm(s[1]);
}

}  // namespace

StateVector spin_up() { return qstate::basis_state({2}, {0}); }
StateVector spin_down() { return qstate::basis_state({2}, {1}); }

GameReport spin_flip_play(const UnitaryMatrix& bob1, const UnitaryMatrix& alice, const UnitaryMatrix& bob2,
                          qstate::RandomSource& rng, const std::optional<StateVector>& initial,
                          std::optional<int> forced) {
  check_single(bob1);
  check_single(alice);
  check_single(bob2);
  const StateVector start = initial.value_or(spin_up());
  if (start.dims() != qstate::Dims{2}) throw DomainError("the electron is a single qubit");

  GameReport report;
  report.game = "spinflip";
  Recorder rec(report, start);
  rec.apply("Bob", "first move", bob1, {0});
  rec.apply("Alice", "move", alice, {0});
  rec.apply("Bob", "second move", bob2, {0});
  rec.finish();
  const auto m = qstate::measure(rec.state(), qstate::computational_basis({2}), rng, forced, {"u", "d"});
  rec.note("referee", "measure spin -> " + m.outcome_label);
  report.outcome = m.outcome_label;
  const double alice_pay = m.outcome_index == 1 ? 1.0 : -1.0;
  report.payoffs = {{"alice", alice_pay}, {"bob", -alice_pay}};
  const double pd = std::norm(rec.state()[1]);
  report.details["expected_alice"] = 2.0 * pd - 1.0;
  return report;
}

double spin_flip_expected(const cgame::MixedStrategy& alice_mix, const UnitaryMatrix& bob1,
                          const UnitaryMatrix& bob2, const StateVector& initial) {
  if (alice_mix.size() != 2) throw DomainError("Alice mixes over {1, sigma_x}");
  check_single(bob1);
  check_single(bob2);
  if (initial.dims() != qstate::Dims{2}) throw DomainError("the electron is a single qubit");
  const UnitaryMatrix moves[2] = {qstate::identity(2), qstate::pauli_x()};
  double e = 0.0;
  for (int i = 0; i < 2; ++i) e += alice_mix[i] * (2.0 * down_probability(initial, bob1, moves[i], bob2) - 1.0);
  return e;
}

cgame::Bimatrix spin_flip_table(const StateVector& initial) {
  const UnitaryMatrix moves[2] = {qstate::identity(2), qstate::pauli_x()};
  Eigen::MatrixXd a(2, 4);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 4; ++c) {
      const UnitaryMatrix& second = moves[c / 2];
      const UnitaryMatrix& first = moves[c % 2];
      a(r, c) = 2.0 * down_probability(initial, first, moves[r], second) - 1.0;
    }
  }
  return cgame::zero_sum({"I", "X"}, {"I.I", "I.X", "X.I", "X.X"}, a);
}

}  // namespace qugame::qgames
