#pragma once

#include <optional>

#include "qugame/density/density_matrix.hpp"
#include "qugame/qstate/unitary.hpp"

namespace qugame::density {

struct CloneResult {
  /// Register (input, blank, ancilla) after the machine.
  StateVector output;
  /// Both copies after tracing out the ancilla.
  DensityMatrix pair;
  DensityMatrix clone_a;
  DensityMatrix clone_b;
  double fidelity = 0.0;
  /// Shrink factor of the clone's Bloch vector along the input's.
  double eta = 0.0;
};

/// Three-qubit unitary realizing the 1 -> 2 universal cloner on
/// |x>|0>|0> -> sqrt(2/3)|xx>|A_x> + sqrt(1/6)(|01> + |10>)|A_{not x}>, where
/// |A_1> = |A> and |A_0> = |A_perp>. The ancilla states are the columns of
/// ancilla_basis (identity by default). The remaining columns are completed by
/// Gram-Schmidt.
qstate::UnitaryMatrix uqcm_unitary(const std::optional<qstate::UnitaryMatrix>& ancilla_basis = std::nullopt);

/// Throws DomainError unless psi is a single qubit.
CloneResult uqcm_clone(const StateVector& psi,
                       const std::optional<qstate::UnitaryMatrix>& ancilla_basis = std::nullopt);

}  // namespace qugame::density
