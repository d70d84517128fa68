#include "qugame/qstate/unitary.hpp"

#include <algorithm>
#include <set>

#include "qugame/errors.hpp"

namespace qugame::qstate {

bool is_unitary(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  const Eigen::MatrixXcd defect = m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  return defect.cwiseAbs().maxCoeff() <= tol;
}

UnitaryMatrix::UnitaryMatrix(Eigen::MatrixXcd m, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DomainError("unitary matrix must be square");
  if (!is_unitary(m_, tol)) {
    throw DomainError("matrix is not unitary (defect " + std::to_string(unitarity_defect()) + ")");
  }
}

UnitaryMatrix UnitaryMatrix::adjoint() const { return UnitaryMatrix(m_.adjoint()); }

double UnitaryMatrix::unitarity_defect() const {
  return (m_.adjoint() * m_ - Eigen::MatrixXcd::Identity(m_.rows(), m_.cols())).cwiseAbs().maxCoeff();
}

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.dim() != b.dim()) throw DomainError("cannot multiply unitaries of different dimension");
  return UnitaryMatrix(a.m_ * b.m_);
}

UnitaryMatrix operator*(Complex phase, const UnitaryMatrix& u) { return UnitaryMatrix(phase * u.m_); }

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

UnitaryMatrix tensor(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  return UnitaryMatrix(kron(a.matrix(), b.matrix()));
}

Eigen::VectorXcd apply_operator(const Dims& dims, const Eigen::VectorXcd& amps, const Eigen::MatrixXcd& op,
                                const std::vector<int>& targets) {
  const std::size_t n = total_dim(dims);
  if (static_cast<std::size_t>(amps.size()) != n) throw DomainError("amplitude count does not match dims");
  if (targets.empty()) throw DomainError("no target subsystems");
  std::set<int> seen;
  std::size_t sub_dim = 1;
  for (int t : targets) {
    if (t < 0 || t >= static_cast<int>(dims.size())) {
      throw DomainError("target subsystem " + std::to_string(t) + " out of range");
    }
    if (!seen.insert(t).second) throw DomainError("repeated target subsystem " + std::to_string(t));
    sub_dim *= static_cast<std::size_t>(dims[static_cast<std::size_t>(t)]);
  }
  if (op.rows() != op.cols() || static_cast<std::size_t>(op.rows()) != sub_dim) {
    throw DomainError("operator dimension " + std::to_string(op.rows()) + " does not match targets (" +
                      std::to_string(sub_dim) + ")");
  }

  std::vector<std::size_t> stride(dims.size());
  std::size_t s = 1;
  for (std::size_t k = dims.size(); k-- > 0;) {
    stride[k] = s;
    s *= static_cast<std::size_t>(dims[k]);
  }

  // offsets[j]: displacement of the j-th target configuration, targets[0] most significant.
  std::vector<std::size_t> offsets(sub_dim, 0);
  for (std::size_t j = 0; j < sub_dim; ++j) {
    std::size_t rem = j;
    std::size_t off = 0;
    for (std::size_t k = targets.size(); k-- > 0;) {
      const auto t = static_cast<std::size_t>(targets[k]);
      const auto d = static_cast<std::size_t>(dims[t]);
      off += (rem % d) * stride[t];
      rem /= d;
    }
    offsets[j] = off;
  }

  Eigen::VectorXcd out(amps.size());
  Eigen::VectorXcd gathered(static_cast<Eigen::Index>(sub_dim));
  for (std::size_t base = 0; base < n; ++base) {
    bool is_base = true;
    for (int t : targets) {
      const auto tt = static_cast<std::size_t>(t);
      if ((base / stride[tt]) % static_cast<std::size_t>(dims[tt]) != 0) {
        is_base = false;
        break;
      }
    }
    if (!is_base) continue;
    for (std::size_t j = 0; j < sub_dim; ++j) {
      gathered[static_cast<Eigen::Index>(j)] = amps[static_cast<Eigen::Index>(base + offsets[j])];
    }
    const Eigen::VectorXcd mapped = op * gathered;
    for (std::size_t j = 0; j < sub_dim; ++j) {
      out[static_cast<Eigen::Index>(base + offsets[j])] = mapped[static_cast<Eigen::Index>(j)];
    }
  }
  return out;
}

StateVector apply(const StateVector& state, const UnitaryMatrix& u, const std::vector<int>& targets) {
  return StateVector::normalized(state.dims(), apply_operator(state.dims(), state.amps(), u.matrix(), targets));
}

StateVector apply(const StateVector& state, const UnitaryMatrix& u) {
  if (static_cast<std::size_t>(u.dim()) != state.size()) {
    throw DomainError("unitary dimension " + std::to_string(u.dim()) + " does not match register size " +
                      std::to_string(state.size()));
  }
  return StateVector::normalized(state.dims(), u.matrix() * state.amps());
}

}  // namespace qugame::qstate
