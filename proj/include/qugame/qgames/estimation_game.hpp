#pragma once

#include "qugame/qgames/report.hpp"

namespace qugame::qgames {

/// Measures shots copies of psi in the computational basis, forms the
/// maximum-likelihood density matrix and scores its fidelity with psi against
/// threshold. Throws DomainError unless psi is one qubit and shots >= 1.
GameReport estimation_game(const StateVector& psi, long shots, double threshold, qstate::RandomSource& rng);

}  // namespace qugame::qgames
