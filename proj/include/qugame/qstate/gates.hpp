#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qugame/qstate/unitary.hpp"

namespace qugame::qstate {

enum class Gate {
  kIdentity,
  kPauliX,
  kPauliY,
  kPauliZ,
  kHadamard,
  kCnot,
  kPhase,         // diag(1, e^{i pi r}) for card orientation bit r
  kQuarterPhase,  // diag(1, i)
};

/// Exact matrix for a named gate. kIdentity takes the dimension as param
/// (default 2); kPhase takes r. Other gates ignore param.
UnitaryMatrix standard_gate(Gate g, std::optional<double> param = std::nullopt);

/// Parses names such as "I", "X", "pauli_y", "H", "cnot", "S", "phase".
/// Throws DomainError for unknown names.
Gate gate_from_name(std::string_view name);
std::string gate_name(Gate g);

UnitaryMatrix identity(int dim);
UnitaryMatrix pauli_x();
UnitaryMatrix pauli_y();
UnitaryMatrix pauli_z();
UnitaryMatrix hadamard();

/// H tensored n times. Throws ResourceError past the matrix cap.
UnitaryMatrix walsh(int n);

/// Quantum Fourier transform on n qubits: entry (x, y) = e^{+-2 pi i x y / 2^n} / sqrt(2^n).
UnitaryMatrix qft(int n, bool inverse = false);

/// Applies H to every qubit of an all-qubit register without forming walsh(n).
StateVector apply_walsh(const StateVector& state);

/// Applies the QFT to a whole all-qubit register with a radix-2 FFT,
/// O(n 2^n) and no dense matrix.
StateVector apply_qft(const StateVector& state, bool inverse = false);

/// Controlled addition mod d on two qudits of dimension d: |a, b> -> |a, b + a>.
UnitaryMatrix controlled_add(int d);

/// Permutation matrix |x> -> |perm[x]>.
UnitaryMatrix permutation(const std::vector<int>& perm);

}  // namespace qugame::qstate
