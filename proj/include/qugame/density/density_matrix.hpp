#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qugame/qstate/state_vector.hpp"

namespace qugame::density {

using qstate::Complex;
using qstate::Dims;
using qstate::StateVector;

inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kEigenFloor = -1e-9;

/// Hermitian, unit-trace, positive semidefinite operator.
class DensityMatrix {
 public:
  /// Throws DomainError unless m is square, Hermitian and of trace 1 to 1e-10,
  /// with no eigenvalue below -1e-9.
  explicit DensityMatrix(Eigen::MatrixXcd m);

  /// |psi><psi|.
  static DensityMatrix pure(const StateVector& psi);
  /// identity / d.
  static DensityMatrix maximally_mixed(int d);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  Complex operator()(int r, int c) const { return m_(r, c); }

  /// Ascending eigenvalues.
  Eigen::VectorXd eigenvalues() const;
  /// trace(rho^2).
  double purity() const;

 private:
  Eigen::MatrixXcd m_;
};

/// sum_j p_j |phi_j><phi_j|. Throws DomainError on bad probabilities or mismatched dims.
DensityMatrix rho_from_ensemble(const std::vector<StateVector>& states, const std::vector<double>& probs);

/// <phi| rho |phi>.
double measure_prob(const DensityMatrix& rho, const StateVector& phi);

/// trace(A rho). Throws DomainError unless A is Hermitian to 1e-10.
double expectation(const DensityMatrix& rho, const Eigen::MatrixXcd& observable);

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double norm() const;
};

/// r_i = trace(rho sigma_i). Throws DomainError unless rho is 2x2.
BlochVector to_bloch(const DensityMatrix& rho);
/// (1 + r.sigma)/2. Throws DomainError when |r| > 1 + 1e-9.
DensityMatrix from_bloch(const BlochVector& r);

/// Traces out every subsystem not listed in keep. The kept subsystems stay in
/// their original order. Throws DomainError when dims do not multiply to rho.dim().
DensityMatrix partial_trace(const DensityMatrix& rho, const Dims& dims, const std::vector<int>& keep);

/// <psi| rho |psi>.
double fidelity(const DensityMatrix& rho, const StateVector& psi);

}  // namespace qugame::density
