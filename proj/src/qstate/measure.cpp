#include "qugame/qstate/measure.hpp"

#include <cmath>
#include <set>

#include "qugame/errors.hpp"
#include "qugame/qstate/unitary.hpp"

namespace qugame::qstate {

namespace {

std::size_t pick_outcome(const std::vector<double>& probs, RandomSource& rng, std::optional<int> forced) {
  if (forced) {
    if (*forced < 0 || static_cast<std::size_t>(*forced) >= probs.size()) {
      throw DomainError("forced outcome " + std::to_string(*forced) + " out of range");
    }
    if (probs[static_cast<std::size_t>(*forced)] <= kCheckTolerance) {
      throw DomainError("forced outcome " + std::to_string(*forced) + " has zero probability");
    }
    return static_cast<std::size_t>(*forced);
  }
  return rng.sample(probs);
}

std::string label_for(const std::vector<std::string>& labels, std::size_t k) {
  if (k < labels.size()) return labels[k];
  return std::to_string(k);
}

void check_targets(const Dims& dims, const std::vector<int>& targets) {
  if (targets.empty()) throw DomainError("no target subsystems");
  std::set<int> seen;
  for (int t : targets) {
    if (t < 0 || t >= static_cast<int>(dims.size())) {
      throw DomainError("target subsystem " + std::to_string(t) + " out of range");
    }
    if (!seen.insert(t).second) throw DomainError("repeated target subsystem " + std::to_string(t));
  }
}

}  // namespace

void check_orthonormal(const std::vector<StateVector>& basis, double tol) {
  if (basis.empty()) throw DomainError("empty measurement basis");
  const Dims& dims = basis.front().dims();
  for (const auto& b : basis) {
    if (b.dims() != dims) throw DomainError("basis vectors have mismatched dims");
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const Complex ip = inner(basis[i], basis[j]);
      const double want = i == j ? 1.0 : 0.0;
      if (std::abs(ip - want) > tol) throw DomainError("measurement basis is not orthonormal");
    }
  }
}

std::vector<double> outcome_probabilities(const StateVector& state, const std::vector<StateVector>& basis) {
  std::vector<double> probs;
  probs.reserve(basis.size());
  for (const auto& b : basis) {
    if (b.dims() != state.dims()) throw DomainError("basis dims do not match the state");
    probs.push_back(std::norm(inner(b, state)));
  }
  return probs;
}

MeasurementRecord measure(const StateVector& state, const std::vector<StateVector>& basis, RandomSource& rng,
                          std::optional<int> forced, const std::vector<std::string>& labels) {
  check_orthonormal(basis);
  if (basis.front().dims() != state.dims()) throw DomainError("basis dims do not match the state");
  const std::vector<double> probs = outcome_probabilities(state, basis);
  double total = 0;
  for (double p : probs) total += p;
  if (std::abs(total - 1.0) > kCheckTolerance) throw DomainError("measurement basis is incomplete for this state");
  const std::size_t k = pick_outcome(probs, rng, forced);
  return MeasurementRecord{static_cast<int>(k), label_for(labels, k), probs[k], basis[k], std::nullopt};
}

MeasurementRecord measure_computational(const StateVector& state, RandomSource& rng, std::optional<int> forced) {
  const std::vector<double> probs = state.probabilities();
  const std::size_t k = pick_outcome(probs, rng, forced);
  return MeasurementRecord{static_cast<int>(k), ket_label(state.dims(), k), probs[k],
                           basis_state_index(state.dims(), k), std::nullopt};
}

Dims remaining_dims(const Dims& dims, const std::vector<int>& targets) {
  std::set<int> t(targets.begin(), targets.end());
  Dims out;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (!t.count(static_cast<int>(k))) out.push_back(dims[k]);
  }
  return out;
}

Eigen::VectorXcd project_onto(const StateVector& state, const std::vector<int>& targets, const StateVector& bra) {
  const Dims& dims = state.dims();
  check_targets(dims, targets);
  Dims target_dims;
  for (int t : targets) target_dims.push_back(dims[static_cast<std::size_t>(t)]);
  if (bra.dims() != target_dims) throw DomainError("projector dims do not match the targets");
  const Dims rest = remaining_dims(dims, targets);
  std::size_t rest_dim = 1;
  for (int d : rest) rest_dim *= static_cast<std::size_t>(d);

  std::set<int> tset(targets.begin(), targets.end());
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(rest_dim));
  std::vector<int> tdig(targets.size());
  std::vector<int> rdig;
  for (std::size_t idx = 0; idx < state.size(); ++idx) {
    const Complex a = state[idx];
    if (a == Complex(0, 0)) continue;
    const std::vector<int> digits = digits_of(dims, idx);
    for (std::size_t k = 0; k < targets.size(); ++k) tdig[k] = digits[static_cast<std::size_t>(targets[k])];
    rdig.clear();
    for (std::size_t k = 0; k < dims.size(); ++k) {
      if (!tset.count(static_cast<int>(k))) rdig.push_back(digits[k]);
    }
    const std::size_t r = rest.empty() ? 0 : index_of(rest, rdig);
    out[static_cast<Eigen::Index>(r)] += std::conj(bra[index_of(target_dims, tdig)]) * a;
  }
  return out;
}

MeasurementRecord measure_subsystems(const StateVector& state, const std::vector<int>& targets,
                                     const std::vector<StateVector>& basis, RandomSource& rng,
                                     std::optional<int> forced, const std::vector<std::string>& labels) {
  check_targets(state.dims(), targets);
  check_orthonormal(basis);
  const Dims rest = remaining_dims(state.dims(), targets);
  if (rest.empty()) return measure(state, basis, rng, forced, labels);

  std::vector<Eigen::VectorXcd> residuals;
  std::vector<double> probs;
  for (const auto& b : basis) {
    residuals.push_back(project_onto(state, targets, b));
    probs.push_back(residuals.back().squaredNorm());
  }
  double total = 0;
  for (double p : probs) total += p;
  if (std::abs(total - 1.0) > kCheckTolerance) throw DomainError("measurement basis is incomplete for this state");
  const std::size_t k = pick_outcome(probs, rng, forced);

  StateVector residual = StateVector::normalized(rest, residuals[k]);
  // Rebuild the full collapsed register, |b_k> on targets and the residual elsewhere.
  const Dims& dims = state.dims();
  std::set<int> tset(targets.begin(), targets.end());
  Dims target_dims;
  for (int t : targets) target_dims.push_back(dims[static_cast<std::size_t>(t)]);
  Eigen::VectorXcd full(static_cast<Eigen::Index>(state.size()));
  std::vector<int> tdig(targets.size());
  std::vector<int> rdig;
  for (std::size_t idx = 0; idx < state.size(); ++idx) {
    const std::vector<int> digits = digits_of(dims, idx);
    for (std::size_t j = 0; j < targets.size(); ++j) tdig[j] = digits[static_cast<std::size_t>(targets[j])];
    rdig.clear();
    for (std::size_t j = 0; j < dims.size(); ++j) {
      if (!tset.count(static_cast<int>(j))) rdig.push_back(digits[j]);
    }
    full[static_cast<Eigen::Index>(idx)] = basis[k][index_of(target_dims, tdig)] * residual[index_of(rest, rdig)];
  }
  return MeasurementRecord{static_cast<int>(k), label_for(labels, k), probs[k],
                           StateVector::normalized(dims, std::move(full)), std::move(residual)};
}

std::vector<int> sample_digits(const StateVector& state, RandomSource& rng) {
  return digits_of(state.dims(), rng.sample(state.probabilities()));
}

std::vector<StateVector> bell_basis(int n) {
  if (n < 2) throw DomainError("bell basis needs at least 2 qubits");
  const double r = 1.0 / std::sqrt(2.0);
  const Dims dims = qubits(n);
  const std::size_t last = (std::size_t{1} << n) - 1;
  auto make = [&](std::size_t i, std::size_t j, double sign) {
    Eigen::VectorXcd a = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(last + 1));
    a[static_cast<Eigen::Index>(i)] = r;
    a[static_cast<Eigen::Index>(j)] = sign * r;
    return StateVector(dims, a);
  };
  if (n == 2) {
    // b0 = (|00>+|11>)/sqrt2, b1 = (|01>+|10>)/sqrt2, b2 = (|00>-|11>)/sqrt2, b3 = (|01>-|10>)/sqrt2
    return {make(0, 3, 1.0), make(1, 2, 1.0), make(0, 3, -1.0), make(1, 2, -1.0)};
  }
  return {make(0, last, 1.0), make(0, last, -1.0)};
}

std::vector<StateVector> x_basis() { return {qubit(1, 1), qubit(1, -1)}; }

std::vector<StateVector> computational_basis(const Dims& dims) {
  const std::size_t n = total_dim(dims);
  std::vector<StateVector> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(basis_state_index(dims, k));
  return out;
}

}  // namespace qugame::qstate
