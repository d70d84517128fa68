#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qugame/qstate/state_vector.hpp"

namespace qugame::qstate {

/// Dense square matrix that passed a unitarity check at construction.
class UnitaryMatrix {
 public:
  /// Throws DomainError unless m is square and U^dagger U == 1 within tol.
  explicit UnitaryMatrix(Eigen::MatrixXcd m, double tol = kCheckTolerance);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  Complex operator()(int r, int c) const { return m_(r, c); }

  UnitaryMatrix adjoint() const;

  /// Largest entrywise deviation of U^dagger U from the identity.
  double unitarity_defect() const;

  friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b);
  /// Scaling by a unit-modulus phase keeps the matrix unitary.
  friend UnitaryMatrix operator*(Complex phase, const UnitaryMatrix& u);

 private:
  Eigen::MatrixXcd m_;
};

bool is_unitary(const Eigen::MatrixXcd& m, double tol = kCheckTolerance);

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);
UnitaryMatrix tensor(const UnitaryMatrix& a, const UnitaryMatrix& b);

/// Applies u to the listed subsystems (identity elsewhere). targets[0] is the
/// most significant factor of u. Throws DomainError on a dimension mismatch or
/// repeated/out-of-range targets.
StateVector apply(const StateVector& state, const UnitaryMatrix& u, const std::vector<int>& targets);

/// Same contraction for an arbitrary (possibly non-unitary) operator; the
/// result is raw amplitudes, not renormalized.
Eigen::VectorXcd apply_operator(const Dims& dims, const Eigen::VectorXcd& amps,
                                const Eigen::MatrixXcd& op, const std::vector<int>& targets);

/// Full-register operator; u.dim() must equal the state size.
StateVector apply(const StateVector& state, const UnitaryMatrix& u);

}  // namespace qugame::qstate
