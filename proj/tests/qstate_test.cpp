#include <bit>
#include <cmath>
#include <complex>

#include "doctest.h"
#include "qugame/errors.hpp"
#include "qugame/qstate.hpp"

using namespace qugame;
using namespace qugame::qstate;

namespace {

const double kR2 = 1.0 / std::sqrt(2.0);

bool mat_close(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol = 1e-12) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).cwiseAbs().maxCoeff() <= tol;
}

StateVector random_state(const Dims& dims, RandomSource& rng) {
  const std::size_t n = total_dim(dims);
  Eigen::VectorXcd a(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    a[static_cast<Eigen::Index>(i)] = Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
  }
  return StateVector::normalized(dims, a);
}

UnitaryMatrix random_unitary(int d, RandomSource& rng) {
  Eigen::MatrixXcd m(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m(i, j) = Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
  return UnitaryMatrix(qr.householderQ() * Eigen::MatrixXcd::Identity(d, d));
}

}  // namespace

TEST_CASE("basis_state uses leftmost-most-significant ordering") {
  const StateVector s = basis_state(qubits(5), {1, 0, 0, 1, 1});
  CHECK(s.size() == 32);
  CHECK(std::abs(s[19] - 1.0) < 1e-15);
  CHECK(s.probabilities()[19] == doctest::Approx(1.0));

  const StateVector one = basis_state({2}, {0});
  CHECK(one[0] == Complex(1, 0));
  CHECK(one[1] == Complex(0, 0));

  CHECK(std::abs(basis_state({3, 3}, {2, 1})[7] - 1.0) < 1e-15);
  CHECK(index_of({3, 3}, {2, 1}) == 7);
  CHECK(digits_of({3, 3}, 7) == std::vector<int>{2, 1});
}

TEST_CASE("state construction rejects bad input") {
  CHECK_THROWS_AS(basis_state({2, 2}, {0, 2}), DomainError);
  CHECK_THROWS_AS(basis_state({2, 2}, {0}), DomainError);
  CHECK_THROWS_AS(basis_state({1, 2}, {0, 0}), DomainError);
  Eigen::VectorXcd a(2);
  a << 1, 1;
  CHECK_THROWS_AS(StateVector({2}, a), DomainError);
  CHECK_THROWS_AS(StateVector({2, 2}, StateVector::normalized({2}, a).amps()), DomainError);
  CHECK_THROWS_AS(StateVector::normalized({2}, Eigen::VectorXcd::Zero(2)), DomainError);
  CHECK_THROWS_AS(total_dim(qubits(21)), ResourceError);
}

TEST_CASE("tensor products concatenate dims") {
  const StateVector ud = tensor(basis_state({2}, {0}), basis_state({2}, {1}));
  CHECK(ud.dims() == Dims{2, 2});
  CHECK(approx_equal(ud, basis_state_index({2, 2}, 1)));

  const UnitaryMatrix x1 = tensor(pauli_x(), identity(1));
  CHECK(mat_close(x1.matrix(), pauli_x().matrix()));

  Eigen::MatrixXcd w4(4, 4);
  w4 << 1, 1, 1, 1, 1, -1, 1, -1, 1, 1, -1, -1, 1, -1, -1, 1;
  CHECK(mat_close(tensor(walsh(1), walsh(1)).matrix(), 0.5 * w4));
  CHECK(mat_close(walsh(2).matrix(), 0.5 * w4));
}

TEST_CASE("single-qubit gate actions") {
  const StateVector u = basis_state({2}, {0});
  const StateVector d = basis_state({2}, {1});
  CHECK(approx_equal(apply(u, pauli_x(), {0}), d));
  CHECK(approx_equal(apply(u, hadamard(), {0}), qubit(1, 1)));
  CHECK(approx_equal(apply(apply(u, hadamard(), {0}), hadamard(), {0}), u));
  CHECK_THROWS_AS(apply(u, standard_gate(Gate::kCnot), {0}), DomainError);
  CHECK_THROWS_AS(apply(tensor(u, u), standard_gate(Gate::kCnot), {0, 0}), DomainError);
  CHECK_THROWS_AS(apply(u, pauli_x(), {1}), DomainError);
}

TEST_CASE("standard gates") {
  const Complex i(0, 1);
  Eigen::MatrixXcd y(2, 2);
  y << 0, -i, i, 0;
  CHECK(mat_close(standard_gate(Gate::kPauliY).matrix(), y));
  CHECK(mat_close(standard_gate(Gate::kPhase, 0.0).matrix(), Eigen::MatrixXcd::Identity(2, 2)));
  CHECK(mat_close(standard_gate(Gate::kPhase, 1.0).matrix(), pauli_z().matrix()));
  const StateVector d = basis_state({2}, {1});
  const UnitaryMatrix s = standard_gate(Gate::kQuarterPhase);
  CHECK(approx_equal(apply(apply(d, s, {0}), s, {0}), StateVector({2}, -d.amps())));
  CHECK(standard_gate(Gate::kIdentity, 3.0).dim() == 3);
  CHECK(gate_from_name("pauli_y") == Gate::kPauliY);
  CHECK(gate_from_name("H") == Gate::kHadamard);
  CHECK_THROWS_AS(gate_from_name("toffoli"), DomainError);
  Eigen::MatrixXcd bad(2, 2);
  bad << 1, 1, 0, 1;
  CHECK_THROWS_AS(UnitaryMatrix{bad}, DomainError);
}

TEST_CASE("Pauli algebra") {
  const Complex i(0, 1);
  const Eigen::MatrixXcd x = pauli_x().matrix();
  const Eigen::MatrixXcd y = pauli_y().matrix();
  const Eigen::MatrixXcd z = pauli_z().matrix();
  const Eigen::MatrixXcd one = Eigen::MatrixXcd::Identity(2, 2);
  CHECK(mat_close(x * x, one));
  CHECK(mat_close(y * y, one));
  CHECK(mat_close(z * z, one));
  CHECK(mat_close(x * y, i * z));
  CHECK(mat_close(y * z, i * x));
  CHECK(mat_close(z * x, i * y));
}

TEST_CASE("walsh transform") {
  const StateVector w = apply(basis_state(qubits(2), {0, 0}), walsh(2));
  for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(w[k] - 0.5) < 1e-12);

  const StateVector t = apply(basis_state(qubits(3), {1, 1, 0}), walsh(3));
  const int signs[8] = {1, 1, -1, -1, -1, -1, 1, 1};
  for (std::size_t k = 0; k < 8; ++k) CHECK(std::abs(t[k] - signs[k] / std::sqrt(8.0)) < 1e-12);

  for (int n = 1; n <= 4; ++n) {
    const UnitaryMatrix wn = walsh(n);
    CHECK(mat_close((wn * wn).matrix(), Eigen::MatrixXcd::Identity(wn.dim(), wn.dim())));
  }
  CHECK_THROWS_AS(walsh(11), ResourceError);
}

TEST_CASE("walsh matches the bitwise dot-product oracle") {
  for (int n = 1; n <= 6; ++n) {
    const std::size_t dim = std::size_t{1} << n;
    const UnitaryMatrix wn = walsh(n);
    for (std::size_t y = 0; y < dim; ++y) {
      const StateVector out = apply(basis_state_index(qubits(n), y), wn);
      const StateVector fast = apply_walsh(basis_state_index(qubits(n), y));
      for (std::size_t x = 0; x < dim; ++x) {
        const double want = (std::popcount(x & y) % 2 ? -1.0 : 1.0) / std::sqrt(static_cast<double>(dim));
        CHECK(std::abs(out[x] - want) < 1e-12);
        CHECK(std::abs(fast[x] - want) < 1e-12);
      }
    }
  }
}

TEST_CASE("fourier transform") {
  CHECK(mat_close(qft(1).matrix(), hadamard().matrix()));
  for (int n = 1; n <= 5; ++n) {
    const int dim = 1 << n;
    CHECK(mat_close((qft(n) * qft(n, true)).matrix(), Eigen::MatrixXcd::Identity(dim, dim)));
  }
  const Complex i(0, 1);
  Eigen::MatrixXcd f2(4, 4);
  f2 << 1, 1, 1, 1, 1, i, -1.0, -i, 1, -1.0, 1, -1.0, 1, -i, -1.0, i;
  CHECK(mat_close(qft(2).matrix(), 0.5 * f2));

  RandomSource rng(7);
  for (int n = 1; n <= 8; ++n) {
    const StateVector psi = random_state(qubits(n), rng);
    CHECK(approx_equal(apply_qft(psi), apply(psi, qft(n))));
    CHECK(approx_equal(apply_qft(psi, true), apply(psi, qft(n, true))));
  }
}

TEST_CASE("inner product") {
  const Complex a(0.6, 0.0), b(0.0, 0.8);
  CHECK(std::abs(inner(basis_state({2}, {0}), qubit(a, b)) - a) < 1e-12);
  CHECK(std::abs(inner(basis_state({2}, {1}), basis_state({2}, {1})) - 1.0) < 1e-12);
  const auto bell = bell_basis(2);
  CHECK(std::abs(inner(bell[0], bell[2])) < 1e-12);
  CHECK_THROWS_AS(inner(basis_state({2}, {0}), basis_state({3}, {0})), DomainError);
}

TEST_CASE("bell basis") {
  const auto b = bell_basis(2);
  REQUIRE(b.size() == 4);
  CHECK(std::abs(b[3][1] - kR2) < 1e-12);
  CHECK(std::abs(b[3][2] + kR2) < 1e-12);
  const StateVector b0 = apply(apply(basis_state(qubits(2), {0, 0}), hadamard(), {0}),
                               standard_gate(Gate::kCnot), {0, 1});
  CHECK(approx_equal(b0, b[0]));
  const auto b3n = bell_basis(3);
  REQUIRE(b3n.size() == 2);
  CHECK(std::abs(b3n[0][0] - kR2) < 1e-12);
  CHECK(std::abs(b3n[0][7] - kR2) < 1e-12);
  CHECK_THROWS_AS(bell_basis(1), DomainError);
  CHECK_NOTHROW(check_orthonormal(b));
}

TEST_CASE("measurement") {
  RandomSource rng(1);
  const StateVector plus = qubit(1, 1);
  const auto rec = measure_computational(plus, rng);
  CHECK(rec.probability == doctest::Approx(0.5));
  CHECK((rec.outcome_index == 0 || rec.outcome_index == 1));
  CHECK(approx_equal(rec.post_state, basis_state_index({2}, static_cast<std::size_t>(rec.outcome_index))));

  const auto bell = bell_basis(2);
  const auto r2 = measure(bell[0], bell, rng);
  CHECK(r2.outcome_index == 0);
  CHECK(r2.probability == doctest::Approx(1.0));

  const StateVector uni = uniform_superposition(qubits(3));
  for (double p : outcome_probabilities(uni, computational_basis(qubits(3)))) CHECK(p == doctest::Approx(0.125));

  std::vector<StateVector> skew = {qubit(1, 0), qubit(1, 1)};
  CHECK_THROWS_AS(measure(plus, skew, rng), DomainError);
  CHECK_THROWS_AS(measure_computational(basis_state({2}, {0}), rng, 1), DomainError);
}

TEST_CASE("measurement frequencies follow the Born rule") {
  RandomSource rng(2024);
  RandomSource gen(5);
  const StateVector psi = random_state(qubits(3), gen);
  const std::vector<double> p = psi.probabilities();
  const int trials = 100000;
  std::vector<int> counts(8, 0);
  for (int t = 0; t < trials; ++t) ++counts[static_cast<std::size_t>(measure_computational(psi, rng).outcome_index)];
  for (std::size_t k = 0; k < 8; ++k) {
    const double se = std::sqrt(p[k] * (1 - p[k]) / trials);
    CHECK(std::abs(counts[k] / static_cast<double>(trials) - p[k]) <= 3 * se + 1e-12);
  }
}

TEST_CASE("partial measurement returns the residual state") {
  RandomSource rng(3);
  const StateVector ghz = bell_basis(3)[0];
  const auto rec = measure_subsystems(ghz, {1}, computational_basis({2}), rng, 1);
  CHECK(rec.probability == doctest::Approx(0.5));
  REQUIRE(rec.residual.has_value());
  CHECK(approx_equal(*rec.residual, basis_state(qubits(2), {1, 1})));
  CHECK(approx_equal(rec.post_state, basis_state(qubits(3), {1, 1, 1})));
  CHECK(remaining_dims({2, 3, 2}, {1}) == Dims{2, 2});
}

TEST_CASE("unitaries preserve norm and disjoint applications commute") {
  RandomSource rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Dims dims = {2, 3, 2};
    const StateVector psi = random_state(dims, rng);
    const UnitaryMatrix u = random_unitary(6, rng);
    const UnitaryMatrix v = random_unitary(2, rng);
    const Eigen::VectorXcd raw = apply_operator(dims, psi.amps(), u.matrix(), {0, 1});
    CHECK(std::abs(raw.norm() - 1.0) < 1e-10);
    const StateVector ab = apply(apply(psi, u, {0, 1}), v, {2});
    const StateVector ba = apply(apply(psi, v, {2}), u, {0, 1});
    CHECK(approx_equal(ab, ba));
    const UnitaryMatrix w = random_unitary(4, rng);
    const UnitaryMatrix t = random_unitary(3, rng);
    CHECK(approx_equal(apply(apply(psi, w, {2, 0}), t, {1}), apply(apply(psi, t, {1}), w, {2, 0})));
  }
}

TEST_CASE("target order selects the factor of the operator") {
  const UnitaryMatrix cnot = standard_gate(Gate::kCnot);
  const StateVector s = basis_state(qubits(2), {0, 1});
  CHECK(approx_equal(apply(s, cnot, {0, 1}), s));
  CHECK(approx_equal(apply(s, cnot, {1, 0}), basis_state(qubits(2), {1, 1})));
  const StateVector q = basis_state({3, 3}, {2, 1});
  CHECK(approx_equal(apply(q, controlled_add(3), {0, 1}), basis_state({3, 3}, {2, 0})));
}

TEST_CASE("phase-insensitive equality") {
  const StateVector a = qubit(0.6, Complex(0, 0.8));
  const StateVector b = StateVector({2}, Complex(0, 1) * a.amps());
  CHECK(equal_up_to_phase(a, b));
  CHECK_FALSE(approx_equal(a, b));
  CHECK_FALSE(equal_up_to_phase(a, qubit(0.8, Complex(0, 0.6))));
}

TEST_CASE("random source is deterministic") {
  RandomSource a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.uniform() == b.uniform());
  RandomSource c(42);
  for (int i = 0; i < 1000; ++i) {
    const auto v = c.between(3, 9);
    CHECK((v >= 3 && v <= 9));
  }
}

TEST_CASE("describe formats kets") {
  CHECK(ket_label(qubits(3), 5) == "|101>");
  const std::string s = describe(qubit(1, 1));
  CHECK(s.find("|0>") != std::string::npos);
  CHECK(s.find("|1>") != std::string::npos);
}
