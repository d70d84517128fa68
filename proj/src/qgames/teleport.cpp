#include "qugame/qgames/teleport.hpp"

#include "qugame/errors.hpp"
#include "qugame/qstate/gates.hpp"

namespace qugame::qgames {

namespace {

const std::vector<std::string> kBellLabels = {"b0", "b1", "b2", "b3"};

void check_bell(int k) {
  if (k < 0 || k > 3) throw DomainError("Bell outcomes are 0..3");
}

}  // namespace

Eigen::VectorXcd teleport_residual(const StateVector& psi, int bell_outcome) {
  check_bell(bell_outcome);
  if (psi.dims() != qstate::Dims{2}) throw DomainError("teleportation sends one qubit");
  const StateVector joint = qstate::tensor(psi, qstate::bell_basis(2)[3]);
  return qstate::project_onto(joint, {0, 1}, qstate::bell_basis(2)[static_cast<std::size_t>(bell_outcome)]);
}

UnitaryMatrix teleport_correction(int bell_outcome) {
  check_bell(bell_outcome);
  const qstate::Complex i(0, 1);
  switch (bell_outcome) {
    case 0: return i * qstate::pauli_y();
    case 1: return qstate::Complex(-1) * qstate::pauli_z();
    case 2: return qstate::pauli_x();
    default: return qstate::Complex(-1) * qstate::identity(2);
  }
}

ProtocolResult teleport(const StateVector& psi, qstate::RandomSource& rng, std::optional<int> forced_bell) {
  if (psi.dims() != qstate::Dims{2}) throw DomainError("teleportation sends one qubit");
  if (forced_bell) check_bell(*forced_bell);
  GameReport report;
  report.game = "teleport";
  Recorder rec(report, qstate::tensor(psi, qstate::bell_basis(2)[3]));
  rec.note("Alice/Bob", "share b3, Alice holds qubit 1 and Bob qubit 2");
  const auto m = rec.measure("Alice", "Bell measurement of qubits 0 and 1", {0, 1}, qstate::bell_basis(2), rng,
                             forced_bell, kBellLabels);
  const int k = m.outcome_index;
  rec.note("Alice", "send " + kBellLabels[static_cast<std::size_t>(k)] + " over the classical channel");
  const char* names[] = {"i sigma_y", "-sigma_z", "sigma_x", "-1"};
  rec.apply("Bob", std::string("apply ") + names[k], teleport_correction(k), {2});
  rec.finish();

  const Eigen::VectorXcd out = qstate::project_onto(rec.state(), {0, 1}, qstate::bell_basis(2)[static_cast<std::size_t>(k)]);
  StateVector recovered = StateVector::normalized({2}, out);
  const double overlap = std::abs(qstate::inner(recovered, psi));
  report.outcome = kBellLabels[static_cast<std::size_t>(k)];
  report.details["bell_outcome"] = k;
  report.details["bell_probability"] = m.probability;
  report.details["overlap"] = overlap;
  report.payoffs = {{"fidelity", overlap * overlap}};
  return ProtocolResult{std::move(report), std::move(recovered), overlap};
}

}  // namespace qugame::qgames
