#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qugame/qstate/random.hpp"
#include "qugame/qstate/state_vector.hpp"

namespace qugame::qstate {

struct MeasurementRecord {
  int outcome_index = 0;
  std::string outcome_label;
  double probability = 0.0;
  /// Collapsed full register.
  StateVector post_state;
  /// Normalized state of the unmeasured subsystems (empty dims for a full measurement).
  std::optional<StateVector> residual;
};

/// Throws DomainError unless the vectors share dims and are orthonormal to tol.
void check_orthonormal(const std::vector<StateVector>& basis, double tol = kCheckTolerance);

/// Outcome probabilities |<b_k|psi>|^2 for a basis of the full register.
std::vector<double> outcome_probabilities(const StateVector& state, const std::vector<StateVector>& basis);

/// Projective measurement of the whole register in an orthonormal basis.
/// When forced is set that outcome is selected instead of sampling; it must
/// have nonzero probability.
MeasurementRecord measure(const StateVector& state, const std::vector<StateVector>& basis, RandomSource& rng,
                          std::optional<int> forced = std::nullopt, const std::vector<std::string>& labels = {});

/// Measurement in the computational basis of the full register.
MeasurementRecord measure_computational(const StateVector& state, RandomSource& rng,
                                        std::optional<int> forced = std::nullopt);

/// (<b| on targets, identity elsewhere) psi, returned as raw amplitudes over
/// the remaining subsystems in their original order. Its squared norm is the
/// outcome probability.
Eigen::VectorXcd project_onto(const StateVector& state, const std::vector<int>& targets, const StateVector& bra);

/// Dims of the subsystems not listed in targets.
Dims remaining_dims(const Dims& dims, const std::vector<int>& targets);

/// Measures only the target subsystems in the given basis over their dims.
MeasurementRecord measure_subsystems(const StateVector& state, const std::vector<int>& targets,
                                     const std::vector<StateVector>& basis, RandomSource& rng,
                                     std::optional<int> forced = std::nullopt,
                                     const std::vector<std::string>& labels = {});

/// Computational-basis measurement of every qubit; returns the digit string.
std::vector<int> sample_digits(const StateVector& state, RandomSource& rng);

/// Bell basis. n == 2 gives {b0, b1, b2, b3}; n > 2 gives the N-qubit pair
/// {b0^N, b2^N}. Throws DomainError for n < 2.
std::vector<StateVector> bell_basis(int n);

/// x+ / x- basis (|0> +- |1>)/sqrt2.
std::vector<StateVector> x_basis();

std::vector<StateVector> computational_basis(const Dims& dims);

}  // namespace qugame::qstate
