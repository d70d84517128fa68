#include "qugame/density/cloning.hpp"

#include <cmath>

#include "qugame/errors.hpp"

namespace qugame::density {

qstate::UnitaryMatrix uqcm_unitary(const std::optional<qstate::UnitaryMatrix>& ancilla_basis) {
  Eigen::MatrixXcd w = Eigen::MatrixXcd::Identity(2, 2);
  if (ancilla_basis) {
    if (ancilla_basis->dim() != 2) throw DomainError("ancilla basis must be a 2x2 unitary");
    w = ancilla_basis->matrix();
  }
  const Eigen::VectorXcd anc = w.col(0);   // |A>
  const Eigen::VectorXcd perp = w.col(1);  // |A_perp>
  auto ket2 = [](int a, int b) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
    v[a * 2 + b] = 1.0;
    return v;
  };
  const double big = std::sqrt(2.0 / 3.0);
  const double small = std::sqrt(1.0 / 6.0);
  const Eigen::VectorXcd sym = ket2(0, 1) + ket2(1, 0);
  const Eigen::VectorXcd out0 = big * qstate::kron(ket2(0, 0), perp) + small * qstate::kron(sym, anc);
  const Eigen::VectorXcd out1 = big * qstate::kron(ket2(1, 1), anc) + small * qstate::kron(sym, perp);

  // Columns for |000> (index 0) and |100> (index 4) are fixed; complete the rest.
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(8, 8);
  u.col(0) = out0;
  u.col(4) = out1;
  std::vector<Eigen::VectorXcd> basis = {out0, out1};
  int next = 0;
  for (Eigen::Index col = 0; col < 8; ++col) {
    if (col == 0 || col == 4) continue;
    Eigen::VectorXcd v;
    while (true) {
      v = Eigen::VectorXcd::Zero(8);
      v[next++] = 1.0;
      for (const auto& b : basis) v -= b.dot(v) * b;
      if (v.norm() > 1e-6) break;
    }
    v.normalize();
    basis.push_back(v);
    u.col(col) = v;
  }
  return qstate::UnitaryMatrix(u);
}

CloneResult uqcm_clone(const StateVector& psi, const std::optional<qstate::UnitaryMatrix>& ancilla_basis) {
  if (psi.dims() != Dims{2}) throw DomainError("the cloner takes a single qubit");
  const StateVector blank = qstate::basis_state(qstate::qubits(2), {0, 0});
  const StateVector out = qstate::apply(qstate::tensor(psi, blank), uqcm_unitary(ancilla_basis));
  const DensityMatrix full = DensityMatrix::pure(out);
  const Dims dims = qstate::qubits(3);
  DensityMatrix pair = partial_trace(full, dims, {0, 1});
  DensityMatrix a = partial_trace(pair, qstate::qubits(2), {0});
  DensityMatrix b = partial_trace(pair, qstate::qubits(2), {1});
  const double f = fidelity(a, psi);
  const BlochVector rin = to_bloch(DensityMatrix::pure(psi));
  const BlochVector rc = to_bloch(a);
  const double eta = rin.x * rc.x + rin.y * rc.y + rin.z * rc.z;
  return CloneResult{out, std::move(pair), std::move(a), std::move(b), f, eta};
}

}  // namespace qugame::density
