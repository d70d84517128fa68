#include "qugame/qalgo/bernstein_vazirani.hpp"

#include <bit>

#include "qugame/errors.hpp"
#include "qugame/qstate/gates.hpp"
#include "qugame/qstate/measure.hpp"

namespace qugame::qalgo {

BvOracle::BvOracle(int n, std::uint64_t secret) : n_(n), secret_(secret) {
  if (n < 1 || n >= 64 || secret >= (std::uint64_t{1} << n)) {
    throw DomainError("secret " + std::to_string(secret) + " does not fit in " + std::to_string(n) + " bits");
  }
}

qstate::StateVector BvOracle::operator()(const qstate::StateVector& state) {
  if (state.num_subsystems() != n_) throw DomainError("oracle register width mismatch");
  ++calls_;
  Eigen::VectorXcd a = state.amps();
  for (Eigen::Index x = 0; x < a.size(); ++x) {
    if (std::popcount(static_cast<std::uint64_t>(x) & secret_) % 2) a[x] = -a[x];
  }
  return qstate::StateVector(state.dims(), std::move(a));
}

BvResult bernstein_vazirani(int n, std::uint64_t a, qstate::RandomSource& rng) {
  BvOracle oracle(n, a);
  const qstate::StateVector start = qstate::basis_state_index(qstate::qubits(n), 0);
  const qstate::StateVector out = qstate::apply_walsh(oracle(qstate::apply_walsh(start)));
  const qstate::MeasurementRecord rec = qstate::measure_computational(out, rng);
  return BvResult{static_cast<std::uint64_t>(rec.outcome_index), oracle.calls(), rec.probability};
}

BvResult bernstein_vazirani(int n, std::uint64_t a) {
  qstate::RandomSource rng;
  return bernstein_vazirani(n, a, rng);
}

}  // namespace qugame::qalgo
