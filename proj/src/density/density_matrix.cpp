#include "qugame/density/density_matrix.hpp"

#include <cmath>
#include <numeric>
#include <set>

#include "qugame/errors.hpp"
#include "qugame/qstate/gates.hpp"

namespace qugame::density {

DensityMatrix::DensityMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) throw DomainError("density matrix must be square");
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kTraceTolerance) throw DomainError("density matrix is not Hermitian");
  if (std::abs(m_.trace() - Complex(1, 0)) > kTraceTolerance) throw DomainError("density matrix trace is not 1");
  if (eigenvalues().minCoeff() < kEigenFloor) throw DomainError("density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  return DensityMatrix(psi.amps() * psi.amps().adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int d) {
  if (d < 1) throw DomainError("dimension must be positive");
  return DensityMatrix(Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d));
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  // Symmetrize so round-off in the off-diagonals cannot leak into the spectrum.
  const Eigen::MatrixXcd h = 0.5 * (m_ + m_.adjoint());
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(h, Eigen::EigenvaluesOnly).eigenvalues();
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

DensityMatrix rho_from_ensemble(const std::vector<StateVector>& states, const std::vector<double>& probs) {
  if (states.empty() || states.size() != probs.size()) throw DomainError("ensemble needs one probability per state");
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) throw DomainError("ensemble probabilities must be nonnegative");
    total += p;
  }
  if (std::abs(total - 1.0) > kTraceTolerance) throw DomainError("ensemble probabilities must sum to 1");
  const auto d = static_cast<Eigen::Index>(states.front().size());
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t j = 0; j < states.size(); ++j) {
    if (states[j].dims() != states.front().dims()) throw DomainError("ensemble states have mismatched dims");
    rho += probs[j] * states[j].amps() * states[j].amps().adjoint();
  }
  return DensityMatrix(rho);
}

double measure_prob(const DensityMatrix& rho, const StateVector& phi) {
  if (static_cast<int>(phi.size()) != rho.dim()) throw DomainError("state dimension does not match rho");
  return phi.amps().dot(rho.matrix() * phi.amps()).real();
}

double expectation(const DensityMatrix& rho, const Eigen::MatrixXcd& observable) {
  if (observable.rows() != rho.dim() || observable.cols() != rho.dim()) {
    throw DomainError("observable dimension does not match rho");
  }
  if ((observable - observable.adjoint()).cwiseAbs().maxCoeff() > kTraceTolerance) {
    throw DomainError("observable is not Hermitian");
  }
  return (observable * rho.matrix()).trace().real();
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

BlochVector to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DomainError("Bloch vectors describe single qubits");
  return {expectation(rho, qstate::pauli_x().matrix()), expectation(rho, qstate::pauli_y().matrix()),
          expectation(rho, qstate::pauli_z().matrix())};
}

DensityMatrix from_bloch(const BlochVector& r) {
  if (r.norm() > 1.0 + 1e-9) throw DomainError("Bloch vector lies outside the unit ball");
  const Eigen::MatrixXcd m = 0.5 * (Eigen::MatrixXcd::Identity(2, 2) + r.x * qstate::pauli_x().matrix() +
                                    r.y * qstate::pauli_y().matrix() + r.z * qstate::pauli_z().matrix());
  return DensityMatrix(m);
}

DensityMatrix partial_trace(const DensityMatrix& rho, const Dims& dims, const std::vector<int>& keep) {
  const std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                                            [](std::size_t a, int d) { return a * static_cast<std::size_t>(d); });
  if (dims.empty() || static_cast<int>(total) != rho.dim()) throw DomainError("dims do not match the density matrix");
  std::set<int> kept(keep.begin(), keep.end());
  if (kept.size() != keep.size()) throw DomainError("repeated subsystem in keep");
  for (int k : keep) {
    if (k < 0 || k >= static_cast<int>(dims.size())) throw DomainError("kept subsystem out of range");
  }
  std::vector<int> ordered(kept.begin(), kept.end());
  Dims kdims, tdims;
  std::vector<int> traced;
  for (std::size_t s = 0; s < dims.size(); ++s) {
    if (kept.count(static_cast<int>(s))) {
      kdims.push_back(dims[s]);
    } else {
      tdims.push_back(dims[s]);
      traced.push_back(static_cast<int>(s));
    }
  }
  auto prod = [](const Dims& d) {
    std::size_t p = 1;
    for (int x : d) p *= static_cast<std::size_t>(x);
    return p;
  };
  const std::size_t kd = prod(kdims);
  const std::size_t td = prod(tdims);
  // Full index of (kept digits, traced digits).
  auto full_index = [&](std::size_t ki, std::size_t ti) {
    std::vector<int> digits(dims.size());
    std::size_t r = ki;
    for (std::size_t j = ordered.size(); j-- > 0;) {
      const auto d = static_cast<std::size_t>(kdims[j]);
      digits[static_cast<std::size_t>(ordered[j])] = static_cast<int>(r % d);
      r /= d;
    }
    r = ti;
    for (std::size_t j = traced.size(); j-- > 0;) {
      const auto d = static_cast<std::size_t>(tdims[j]);
      digits[static_cast<std::size_t>(traced[j])] = static_cast<int>(r % d);
      r /= d;
    }
    std::size_t idx = 0;
    for (std::size_t s = 0; s < dims.size(); ++s) idx = idx * static_cast<std::size_t>(dims[s]) + static_cast<std::size_t>(digits[s]);
    return static_cast<Eigen::Index>(idx);
  };
  std::vector<std::vector<Eigen::Index>> table(kd, std::vector<Eigen::Index>(td));
  for (std::size_t ki = 0; ki < kd; ++ki) {
    for (std::size_t ti = 0; ti < td; ++ti) table[ki][ti] = full_index(ki, ti);
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(kd), static_cast<Eigen::Index>(kd));
  for (std::size_t a = 0; a < kd; ++a) {
    for (std::size_t b = 0; b < kd; ++b) {
      Complex s = 0;
      for (std::size_t t = 0; t < td; ++t) s += rho.matrix()(table[a][t], table[b][t]);
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = s;
    }
  }
  return DensityMatrix(out);
}

double fidelity(const DensityMatrix& rho, const StateVector& psi) { return measure_prob(rho, psi); }

}  // namespace qugame::density
