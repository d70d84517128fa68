#include "qugame/qgames/newcomb.hpp"

#include <cmath>

#include "qugame/errors.hpp"
#include "qugame/qstate/gates.hpp"

namespace qugame::qgames {

double newcomb_payoff(int alice, int sb) {
  static constexpr double kTable[2][2] = {{1000000.0, 0.0}, {1001000.0, 1000.0}};
  if (alice < 0 || alice > 1 || sb < 0 || sb > 1) throw DomainError("Newcomb moves are bits");
  return kTable[alice][sb];
}

cgame::Bimatrix newcomb_table() {
  Eigen::MatrixXd a(2, 2);
  a << newcomb_payoff(0, 0), newcomb_payoff(0, 1), newcomb_payoff(1, 0), newcomb_payoff(1, 1);
  return cgame::Bimatrix({"B2 only", "both"}, {"predicts B2 only", "predicts both"}, a, Eigen::MatrixXd::Zero(2, 2));
}

GameReport newcomb_play(int sb_choice, double w, bool coherent_shorthand) {
  if (sb_choice != 0 && sb_choice != 1) throw DomainError("SB chooses 0 or 1");
  if (!(w >= 0.0 && w <= 1.0)) throw DomainError("w must lie in [0, 1]");
  GameReport report;
  report.game = "newcomb";
  report.params = {{"sb", sb_choice}, {"w", w}, {"coherent_shorthand", coherent_shorthand}};
  const qstate::Dims dims = qstate::qubits(2);
  const StateVector start = qstate::basis_state(dims, {sb_choice, sb_choice});
  const UnitaryMatrix h = qstate::hadamard();

  std::vector<double> probs(4, 0.0);
  if (!coherent_shorthand) {
    Recorder rec(report, start);
    rec.note("SB", "choose |" + std::to_string(sb_choice) + std::to_string(sb_choice) + ">");
    rec.apply("SB", "H on Alice's qubit", h, {0});
    rec.mix("Alice", "sigma_x with probability w, else 1", {{w, qstate::pauli_x()}, {1.0 - w, qstate::identity(2)}},
            {0});
    rec.apply("SB", "H on Alice's qubit", h, {0});
    rec.finish();
    probs = rec.ensemble().probabilities();
  } else {
    // Literal operator sum on amplitudes; not a physical evolution.
    const Eigen::MatrixXcd step3 =
        w * qstate::pauli_x().matrix() + (1.0 - w) * Eigen::MatrixXcd::Identity(2, 2);
    Eigen::VectorXcd amps = qstate::apply_operator(dims, start.amps(), h.matrix(), {0});
    amps = qstate::apply_operator(dims, amps, step3, {0});
    amps = qstate::apply_operator(dims, amps, h.matrix(), {0});
    nlohmann::json raw = nlohmann::json::array();
    for (Eigen::Index k = 0; k < 4; ++k) raw.push_back({amps[k].real(), amps[k].imag()});
    report.details["raw_amplitudes"] = raw;
    report.details["norm"] = amps.norm();
    report.transcript.push_back({"SB", "H on Alice's qubit", {0}, std::nullopt, {}, {}, -1, ""});
    report.transcript.push_back({"Alice", "w sigma_x + (1 - w) 1 on amplitudes", {0}, std::nullopt, {}, {}, -1, ""});
    report.transcript.push_back({"SB", "H on Alice's qubit", {0}, std::nullopt, {}, {}, -1, ""});
    const double n2 = amps.squaredNorm();
    if (n2 < 1e-24) {
      report.outcome = "vanishing amplitude";
      report.payoffs["alice"] = 0.0;
      return report;
    }
    for (Eigen::Index k = 0; k < 4; ++k) probs[static_cast<std::size_t>(k)] = std::norm(amps[k]) / n2;
    report.probabilities = distribution(dims, probs);
  }

  double expected = 0.0;
  std::size_t best = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    expected += probs[k] * newcomb_payoff(static_cast<int>(k / 2), static_cast<int>(k % 2));
    if (probs[k] > probs[best]) best = k;
  }
  report.outcome = qstate::ket_label(dims, best);
  report.payoffs["alice"] = expected;
  return report;
}

}  // namespace qugame::qgames
