#include "qugame/qgames/ewl.hpp"

#include <cmath>

#include "qugame/errors.hpp"
#include "qugame/qstate/gates.hpp"

namespace qugame::qgames {

namespace {

void check_game(const UnitaryMatrix& ua, const UnitaryMatrix& ub, const cgame::Bimatrix& payoffs) {
  if (ua.dim() != 2 || ub.dim() != 2) throw DomainError("EWL moves act on one qubit");
  if (payoffs.rows() != 2 || payoffs.cols() != 2) throw DomainError("EWL payoffs must be 2x2");
}

}  // namespace

UnitaryMatrix ewl_entangler(int n) {
  if (n != 2) throw DomainError("the entangler is defined for two players");
  const Eigen::MatrixXcd xx = qstate::kron(qstate::pauli_x().matrix(), qstate::pauli_x().matrix());
  const Eigen::MatrixXcd u = (Eigen::MatrixXcd::Identity(4, 4) + qstate::Complex(0, 1) * xx) / std::sqrt(2.0);
  return UnitaryMatrix(u);
}

EwlOutcome ewl_play(const UnitaryMatrix& ua, const UnitaryMatrix& ub, const cgame::Bimatrix& payoffs) {
  check_game(ua, ub, payoffs);
  const UnitaryMatrix u = ewl_entangler();
  const StateVector start = qstate::basis_state(qstate::qubits(2), {0, 0});
  const StateVector final_state = qstate::apply(start, u.adjoint() * qstate::tensor(ua, ub) * u);
  EwlOutcome out{0.0, 0.0, final_state, {}};
  for (int k = 0; k < 4; ++k) {
    const double p = std::norm(final_state[static_cast<std::size_t>(k)]);
    out.probabilities[static_cast<std::size_t>(k)] = p;
    out.payoff_a += p * payoffs.a()(k / 2, k % 2);
    out.payoff_b += p * payoffs.b()(k / 2, k % 2);
  }
  return out;
}

MoveSet move_set(const std::vector<std::string>& names) {
  MoveSet m;
  for (const auto& name : names) {
    m.labels.push_back(name);
    m.moves.push_back(qstate::standard_gate(qstate::gate_from_name(name)));
  }
  return m;
}

cgame::Bimatrix ewl_table(const MoveSet& moves, const cgame::Bimatrix& payoffs) {
  const auto n = static_cast<Eigen::Index>(moves.moves.size());
  if (n == 0 || moves.labels.size() != moves.moves.size()) throw DomainError("move set needs one label per move");
  Eigen::MatrixXd a(n, n), b(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const EwlOutcome o =
          ewl_play(moves.moves[static_cast<std::size_t>(i)], moves.moves[static_cast<std::size_t>(j)], payoffs);
      a(i, j) = o.payoff_a;
      b(i, j) = o.payoff_b;
    }
  }
  return cgame::Bimatrix(moves.labels, moves.labels, a, b);
}

GameReport ewl_round(const std::string& game, const std::string& label_a, const UnitaryMatrix& ua,
                     const std::string& label_b, const UnitaryMatrix& ub, const cgame::Bimatrix& payoffs,
                     qstate::RandomSource& rng, std::optional<int> forced) {
  check_game(ua, ub, payoffs);
  GameReport report;
  report.game = game;
  report.params = {{"alice", label_a}, {"bob", label_b}};
  const UnitaryMatrix u = ewl_entangler();
  Recorder rec(report, qstate::basis_state(qstate::qubits(2), {0, 0}));
  rec.apply("referee", "entangle with U", u, {0, 1});
  rec.apply("Alice", "play " + label_a, ua, {0});
  rec.apply("Bob", "play " + label_b, ub, {1});
  rec.apply("referee", "disentangle with U^dagger", u.adjoint(), {0, 1});
  rec.finish();
  std::vector<std::string> labels;
  for (int k = 0; k < 4; ++k) labels.push_back(payoffs.row_labels()[k / 2] + "," + payoffs.col_labels()[k % 2]);
  const auto m = qstate::measure(rec.state(), qstate::computational_basis(qstate::qubits(2)), rng, forced, labels);
  rec.note("referee", "measure -> " + m.outcome_label);
  report.outcome = m.outcome_label;
  const int r = m.outcome_index / 2;
  const int c = m.outcome_index % 2;
  report.payoffs = {{"alice", payoffs.a()(r, c)}, {"bob", payoffs.b()(r, c)}};
  const EwlOutcome e = ewl_play(ua, ub, payoffs);
  report.details["expected_alice"] = e.payoff_a;
  report.details["expected_bob"] = e.payoff_b;
  return report;
}

cgame::MixedNash quantum_bos_mixed(double alpha, double beta, double gamma) {
  return cgame::mixed_nash_2x2(ewl_table(move_set({"I", "Z"}), cgame::battle_of_sexes(alpha, beta, gamma)));
}

}  // namespace qugame::qgames
