#pragma once

#include <optional>

#include "qugame/qgames/report.hpp"

namespace qugame::qgames {

struct ProtocolResult {
  GameReport report;
  /// The receiver's subsystem after the final correction.
  StateVector recovered;
  /// |<recovered|secret>|.
  double overlap = 0.0;
};

/// <b_k| on the first two qubits of psi (x) b3: Bob's unnormalized residual.
Eigen::VectorXcd teleport_residual(const StateVector& psi, int bell_outcome);

/// Bob's correction for Bell outcome k: i sigma_y, -sigma_z, sigma_x, -1.
UnitaryMatrix teleport_correction(int bell_outcome);

/// Alice Bell-measures psi with her half of b3 and Bob corrects his qubit.
/// Throws DomainError unless psi is one qubit.
ProtocolResult teleport(const StateVector& psi, qstate::RandomSource& rng,
                        std::optional<int> forced_bell = std::nullopt);

}  // namespace qugame::qgames
