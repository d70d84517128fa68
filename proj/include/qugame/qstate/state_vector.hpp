#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qugame::qstate {

using Complex = std::complex<double>;
using Dims = std::vector<int>;

inline constexpr double kCheckTolerance = 1e-8;
inline constexpr double kEqualTolerance = 1e-10;

/// Size caps for dense simulation. States may span up to max_state_qubits
/// qubits worth of amplitudes; dense operator matrices are held to a smaller cap.
struct Limits {
  int max_state_qubits = 20;
  int max_matrix_qubits = 10;

  std::size_t max_state_dim() const { return std::size_t{1} << max_state_qubits; }
  std::size_t max_matrix_dim() const { return std::size_t{1} << max_matrix_qubits; }
};

Limits& limits();

/// Product of the subsystem dimensions. Throws DomainError on any dimension < 2
/// and ResourceError when the product exceeds the state cap.
std::size_t total_dim(const Dims& dims);

/// Mixed-radix index of digits; the leftmost subsystem is the most significant.
std::size_t index_of(const Dims& dims, const std::vector<int>& digits);
std::vector<int> digits_of(const Dims& dims, std::size_t index);

/// Register of qudits. Amplitudes are indexed in mixed radix with the leftmost
/// subsystem most significant, so |10011> on five qubits is index 19.
class StateVector {
 public:
  /// Validates length against dims and the norm against kCheckTolerance.
  StateVector(Dims dims, Eigen::VectorXcd amps);

  /// Rescales amps to unit norm. Throws DomainError on a zero vector.
  static StateVector normalized(Dims dims, Eigen::VectorXcd amps);

  const Dims& dims() const { return dims_; }
  const Eigen::VectorXcd& amps() const { return amps_; }
  std::size_t size() const { return static_cast<std::size_t>(amps_.size()); }
  int num_subsystems() const { return static_cast<int>(dims_.size()); }
  Complex operator[](std::size_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }

  double norm() const { return amps_.norm(); }

  /// |amp|^2 for every basis index.
  std::vector<double> probabilities() const;

 private:
  Dims dims_;
  Eigen::VectorXcd amps_;
};

/// Dims of n qubits.
Dims qubits(int n);

StateVector basis_state(const Dims& dims, const std::vector<int>& digits);
StateVector basis_state_index(const Dims& dims, std::size_t index);

/// Single qubit a|0> + b|1>, normalized.
StateVector qubit(Complex a, Complex b);

/// Uniform superposition over all basis states.
StateVector uniform_superposition(const Dims& dims);

StateVector tensor(const StateVector& a, const StateVector& b);

/// <a|b>, conjugating the first argument.
Complex inner(const StateVector& a, const StateVector& b);

bool approx_equal(const StateVector& a, const StateVector& b, double tol = kEqualTolerance);

/// True when a == e^{i phi} b for some phase phi.
bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol = kCheckTolerance);

/// Ket notation listing nonzero amplitudes, at most max_terms of them.
std::string describe(const StateVector& s, int max_terms = 8);

/// Label of a basis index, e.g. "|011>".
std::string ket_label(const Dims& dims, std::size_t index);

}  // namespace qugame::qstate
