#include "qugame/qgames/secret_sharing.hpp"

#include <cmath>

#include "qugame/density/density_matrix.hpp"
#include "qugame/errors.hpp"
#include "qugame/qstate/gates.hpp"

namespace qugame::qgames {

namespace {

const std::vector<std::string> kBellLabels = {"b0", "b1", "b2", "b3"};
const std::vector<std::string> kXLabels = {"x+", "x-"};

// (|00> + |12> + |21>) / sqrt3 left on the two helpers after recovery.
StateVector qutrit_rest() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(9);
  v[0] = v[5] = v[7] = 1.0 / std::sqrt(3.0);
  return StateVector({3, 3}, v);
}

}  // namespace

UnitaryMatrix secret_qubit_correction(int bell_outcome, int bob_outcome) {
  if (bell_outcome < 0 || bell_outcome > 3 || bob_outcome < 0 || bob_outcome > 1) {
    throw DomainError("Bell outcome 0..3 and Bob outcome 0..1 expected");
  }
  const UnitaryMatrix one = qstate::identity(2);
  const UnitaryMatrix x = qstate::pauli_x();
  const UnitaryMatrix z = qstate::pauli_z();
  const UnitaryMatrix table[4][2] = {
      {one, z}, {x, x * z}, {z, one}, {z * x, qstate::Complex(-1) * x}};
  return table[bell_outcome][bob_outcome];
}

ProtocolResult secret_share_qubit(const StateVector& secret, qstate::RandomSource& rng,
                                  std::optional<int> forced_bell, std::optional<int> forced_bob) {
  if (secret.dims() != qstate::Dims{2}) throw DomainError("the secret is one qubit");
  GameReport report;
  report.game = "secret-qubit";
  const StateVector start = qstate::tensor(secret, qstate::bell_basis(3)[0]);
  Recorder rec(report, start);
  rec.note("all", "Alice holds qubits 0 and 1, Bob qubit 2, Gerald qubit 3");
  const auto bell = rec.measure("Alice", "Bell measurement of qubits 0 and 1", {0, 1}, qstate::bell_basis(2), rng,
                                forced_bell, kBellLabels);
  const int k = bell.outcome_index;

  // Gerald with Alice's message only: Bob's qubit stays unmeasured.
  const density::DensityMatrix gerald_alice_only =
      density::partial_trace(density::DensityMatrix::pure(rec.state()), qstate::qubits(4), {3});
  double alice_only = 0.0;
  for (int j = 0; j < 2; ++j) {
    const UnitaryMatrix c = secret_qubit_correction(k, j);
    const density::DensityMatrix fixed(c.matrix() * gerald_alice_only.matrix() * c.matrix().adjoint());
    alice_only = std::max(alice_only, density::fidelity(fixed, secret));
  }

  const auto bob = rec.measure("Bob", "measure qubit 2 in the x basis", {2}, qstate::x_basis(), rng, forced_bob,
                               kXLabels);
  const int j = bob.outcome_index;
  rec.note("Alice/Bob", "send " + kBellLabels[static_cast<std::size_t>(k)] + " and " +
                            kXLabels[static_cast<std::size_t>(j)] + " to Gerald");
  rec.apply("Gerald", "apply the correction for (" + kBellLabels[static_cast<std::size_t>(k)] + ", " +
                          kXLabels[static_cast<std::size_t>(j)] + ")",
            secret_qubit_correction(k, j), {3});
  rec.finish();

  // Gerald with Bob's message only: Alice's outcome is unknown to him.
  Ensemble bob_first(start);
  bob_first.condition({2}, qstate::x_basis(), j);
  const density::DensityMatrix gerald_bob_only =
      density::partial_trace(density::DensityMatrix::pure(bob_first.pure_state()), qstate::qubits(4), {3});

  const StateVector prefix = qstate::tensor(qstate::bell_basis(2)[static_cast<std::size_t>(k)],
                                            qstate::x_basis()[static_cast<std::size_t>(j)]);
  StateVector recovered = StateVector::normalized({2}, qstate::project_onto(rec.state(), {0, 1, 2}, prefix));
  const double overlap = std::abs(qstate::inner(recovered, secret));
  report.outcome = kBellLabels[static_cast<std::size_t>(k)] + "," + kXLabels[static_cast<std::size_t>(j)];
  report.details["bell_outcome"] = k;
  report.details["bob_outcome"] = j;
  report.details["overlap"] = overlap;
  report.details["alice_only_best_fidelity"] = alice_only;
  report.details["bob_only_gerald_eigenvalues"] = {gerald_bob_only.eigenvalues()[0], gerald_bob_only.eigenvalues()[1]};
  report.payoffs = {{"fidelity", overlap * overlap}};
  return ProtocolResult{std::move(report), std::move(recovered), overlap};
}

std::string to_string(SharePair pair) {
  switch (pair) {
    case SharePair::kAliceBob: return "alice-bob";
    case SharePair::kBobGerald: return "bob-gerald";
    default: return "alice-gerald";
  }
}

SharePair share_pair_from_name(const std::string& name) {
  for (SharePair p : {SharePair::kAliceBob, SharePair::kBobGerald, SharePair::kAliceGerald}) {
    if (to_string(p) == name) return p;
  }
  throw DomainError("unknown pair '" + name + "', expected alice-bob, bob-gerald or alice-gerald");
}

StateVector qutrit_encode(const StateVector& secret) {
  if (secret.dims() != qstate::Dims{3}) throw DomainError("the secret is one qutrit");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(27);
  for (int s = 0; s < 3; ++s) {
    for (int x = 0; x < 3; ++x) v[9 * x + 3 * ((x + s) % 3) + (x + 2 * s) % 3] += secret[static_cast<std::size_t>(s)];
  }
  return StateVector({3, 3, 3}, v / std::sqrt(3.0));
}

ProtocolResult secret_share_qutrit(const StateVector& secret, SharePair pair) {
  const StateVector encoded = qutrit_encode(secret);
  GameReport report;
  report.game = "secret-qutrit";
  report.params = {{"pair", to_string(pair)}};
  Recorder rec(report, encoded);
  rec.note("dealer", "encode the secret; Alice holds qutrit 0, Bob 1, Gerald 2");

  const UnitaryMatrix add = qstate::controlled_add(3);
  int first = 0, second = 1;
  std::string first_name = "Alice", second_name = "Bob";
  if (pair == SharePair::kBobGerald) {
    first = 1, second = 2, first_name = "Bob", second_name = "Gerald";
  } else if (pair == SharePair::kAliceGerald) {
    first = 0, second = 2, first_name = "Alice", second_name = "Gerald";
  }
  rec.apply(first_name, "add own qutrit to " + second_name + "'s mod 3", add, {first, second});
  rec.apply(second_name, "add own qutrit to " + first_name + "'s mod 3", add, {second, first});
  if (pair == SharePair::kAliceGerald) rec.apply("Alice", "relabel k -> 2k mod 3", qstate::permutation({0, 2, 1}), {0});
  rec.finish();

  std::vector<int> others;
  for (int q = 0; q < 3; ++q) {
    if (q != first) others.push_back(q);
  }
  StateVector recovered = StateVector::normalized({3}, qstate::project_onto(rec.state(), others, qutrit_rest()));
  const double overlap = std::abs(qstate::inner(recovered, secret));
  report.outcome = first_name + " holds the secret";
  report.details["overlap"] = overlap;
  report.details["holder"] = first;
  const density::DensityMatrix rho = density::DensityMatrix::pure(encoded);
  const char* parties[] = {"alice", "bob", "gerald"};
  for (int q = 0; q < 3; ++q) {
    const Eigen::VectorXd ev = density::partial_trace(rho, {3, 3, 3}, {q}).eigenvalues();
    report.details["share_eigenvalues"][parties[q]] = {ev[0], ev[1], ev[2]};
  }
  report.payoffs = {{"fidelity", overlap * overlap}};
  return ProtocolResult{std::move(report), std::move(recovered), overlap};
}

}  // namespace qugame::qgames
