#include <doctest.h>

#include <cmath>

#include "qugame/density.hpp"
#include "qugame/errors.hpp"
#include "qugame/qstate/gates.hpp"
#include "qugame/qstate/measure.hpp"
#include "qugame/qstate/random.hpp"

using namespace qugame;
using namespace qugame::density;
using qstate::qubit;
using qstate::qubits;

namespace {

StateVector random_qubit(qstate::RandomSource& rng) {
  Eigen::VectorXcd a(2);
  for (int i = 0; i < 2; ++i) a[i] = Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
  return StateVector::normalized({2}, a);
}

DensityMatrix ensemble_example() {
  return rho_from_ensemble({qubit(0.8, 0.6), qubit(0.6, Complex(0, -0.8))}, {0.75, 0.25});
}

}  // namespace

TEST_CASE("mixed ensemble density matrix") {
  const DensityMatrix rho = ensemble_example();
  CHECK(std::abs(rho(0, 0) - Complex(0.57, 0)) < 1e-10);
  CHECK(std::abs(rho(0, 1) - Complex(0.36, 0.12)) < 1e-10);
  CHECK(std::abs(rho(1, 0) - Complex(0.36, -0.12)) < 1e-10);
  CHECK(std::abs(rho(1, 1) - Complex(0.43, 0)) < 1e-10);
  CHECK(std::abs(measure_prob(rho, qubit(0.6, 0.8)) - 0.826) < 5e-4);
  CHECK(std::abs(measure_prob(rho, qubit(0.8, -0.6)) - 0.174) < 5e-4);
  CHECK(std::abs(expectation(rho, qstate::pauli_x().matrix()) - 0.72) < 1e-12);

  const DensityMatrix half = rho_from_ensemble({qubit(1, 0), qubit(0, 1)}, {0.5, 0.5});
  CHECK(half.matrix().isApprox(Eigen::MatrixXcd::Identity(2, 2) / 2.0, 1e-12));
  CHECK(DensityMatrix::pure(qubit(1, 0)).matrix().isApprox(
      (Eigen::MatrixXcd(2, 2) << 1, 0, 0, 0).finished()));
}

TEST_CASE("density matrix validation") {
  Eigen::MatrixXcd m(2, 2);
  m << 0.5, 0.1, 0.2, 0.5;
  CHECK_THROWS_AS(DensityMatrix{m}, DomainError);
  m << 0.6, 0, 0, 0.6;
  CHECK_THROWS_AS(DensityMatrix{m}, DomainError);
  m << 1.5, 0, 0, -0.5;
  CHECK_THROWS_AS(DensityMatrix{m}, DomainError);
  CHECK_THROWS_AS(DensityMatrix{Eigen::MatrixXcd::Identity(2, 3)}, DomainError);
  CHECK_THROWS_AS(rho_from_ensemble({qubit(1, 0)}, {0.9}), DomainError);
  CHECK_THROWS_AS(rho_from_ensemble({qubit(1, 0), qubit(0, 1)}, {1.2, -0.2}), DomainError);
  Eigen::MatrixXcd skew(2, 2);
  skew << 0, 1, 0, 0;
  CHECK_THROWS_AS(expectation(DensityMatrix::maximally_mixed(2), skew), DomainError);
}

TEST_CASE("expectation values") {
  CHECK(std::abs(expectation(DensityMatrix::maximally_mixed(2), qstate::pauli_z().matrix())) < 1e-15);
  CHECK(std::abs(expectation(DensityMatrix::pure(qubit(1, 0)), qstate::pauli_z().matrix()) - 1.0) < 1e-15);
  // Co-diagonal ensemble and observable: the expectation is the weighted eigenvalue sum.
  qstate::RandomSource rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 2 + trial % 4;
    std::vector<double> p(d), a(d);
    double total = 0;
    for (int j = 0; j < d; ++j) {
      p[j] = rng.uniform();
      a[j] = rng.uniform() * 4 - 2;
      total += p[j];
    }
    std::vector<StateVector> states;
    double want = 0;
    Eigen::MatrixXcd obs = Eigen::MatrixXcd::Zero(d, d);
    for (int j = 0; j < d; ++j) {
      p[j] /= total;
      states.push_back(qstate::basis_state_index({d}, j));
      obs(j, j) = a[j];
      want += p[j] * a[j];
    }
    CHECK(std::abs(expectation(rho_from_ensemble(states, p), obs) - want) < 1e-12);
  }
}

TEST_CASE("probabilities over a complete basis sum to one") {
  qstate::RandomSource rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<StateVector> states = {random_qubit(rng), random_qubit(rng), random_qubit(rng)};
    const double w = rng.uniform();
    const DensityMatrix rho = rho_from_ensemble(states, {w / 2, w / 2, 1 - w});
    const StateVector b = random_qubit(rng);
    const StateVector b_perp = StateVector({2}, Eigen::Vector2cd(-std::conj(b[1]), std::conj(b[0])));
    CHECK(std::abs(measure_prob(rho, b) + measure_prob(rho, b_perp) - 1.0) < 1e-10);
    CHECK(rho.eigenvalues().minCoeff() > -1e-12);
  }
}

TEST_CASE("Bloch vectors") {
  const BlochVector zero = to_bloch(DensityMatrix::maximally_mixed(2));
  CHECK(zero.norm() < 1e-15);
  const DensityMatrix third = from_bloch({0, 0, 1.0 / 3.0});
  CHECK(std::abs(third(0, 0).real() - 2.0 / 3.0) < 1e-15);
  CHECK(std::abs(third(1, 1).real() - 1.0 / 3.0) < 1e-15);
  CHECK(std::abs(third(0, 1)) < 1e-15);
  CHECK_THROWS_AS(from_bloch({1, 1, 0}), DomainError);
  CHECK_THROWS_AS(to_bloch(DensityMatrix::maximally_mixed(3)), DomainError);

  qstate::RandomSource rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const StateVector psi = random_qubit(rng);
    const BlochVector r = to_bloch(DensityMatrix::pure(psi));
    CHECK(std::abs(r.norm() - 1.0) < 1e-12);
    const BlochVector s{r.x * 0.7, r.y * 0.7, r.z * 0.7};
    const BlochVector back = to_bloch(from_bloch(s));
    CHECK(std::abs(back.x - s.x) < 1e-12);
    CHECK(std::abs(back.y - s.y) < 1e-12);
    CHECK(std::abs(back.z - s.z) < 1e-12);
  }
}

TEST_CASE("partial trace") {
  const DensityMatrix bell = DensityMatrix::pure(qstate::bell_basis(2)[0]);
  CHECK(partial_trace(bell, qubits(2), {0}).matrix().isApprox(Eigen::MatrixXcd::Identity(2, 2) / 2.0, 1e-14));
  CHECK(partial_trace(bell, qubits(2), {1}).matrix().isApprox(Eigen::MatrixXcd::Identity(2, 2) / 2.0, 1e-14));

  // Product of a qubit and a qutrit: tracing either factor recovers the other.
  qstate::RandomSource rng(9);
  const StateVector a = random_qubit(rng);
  const StateVector b = StateVector::normalized({3}, Eigen::Vector3cd(Complex(0.3, 0.1), 0.5, Complex(0, -0.7)));
  const DensityMatrix ab = DensityMatrix::pure(qstate::tensor(a, b));
  CHECK(partial_trace(ab, {2, 3}, {0}).matrix().isApprox(DensityMatrix::pure(a).matrix(), 1e-12));
  CHECK(partial_trace(ab, {2, 3}, {1}).matrix().isApprox(DensityMatrix::pure(b).matrix(), 1e-12));
  CHECK(partial_trace(ab, {2, 3}, {0, 1}).matrix().isApprox(ab.matrix(), 1e-12));
  CHECK_THROWS_AS(partial_trace(ab, {2, 2}, {0}), DomainError);
  CHECK_THROWS_AS(partial_trace(ab, {2, 3}, {2}), DomainError);
}

TEST_CASE("fidelity") {
  const StateVector psi = qubit(0.6, Complex(0, 0.8));
  CHECK(std::abs(fidelity(DensityMatrix::pure(psi), psi) - 1.0) < 1e-14);
  CHECK(std::abs(fidelity(DensityMatrix::pure(qubit(0.8, Complex(0, -0.6))), psi)) < 1e-14);
}

TEST_CASE("maximum likelihood estimation") {
  const MleEstimate e = mle_bernoulli(2, 1);
  CHECK(std::abs(e.p_hat - 1.0 / 3.0) < 1e-15);
  CHECK(std::abs(e.statistical(0, 0).real() - 2.0 / 3.0) < 1e-15);
  CHECK(std::abs(e.statistical(1, 1).real() - 1.0 / 3.0) < 1e-15);
  CHECK_THROWS_AS(mle_bernoulli(0, 0), DomainError);
  CHECK_THROWS_AS(mle_bernoulli(-1, 3), DomainError);

  // Grid-search oracle over r_z in [-1, 1] at spacing 1e-4.
  qstate::RandomSource rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const long na = static_cast<long>(rng.uniform() * 50);
    const long nb = static_cast<long>(rng.uniform() * 50) + (na == 0 ? 1 : 0);
    const MleEstimate m = mle_bernoulli(na, nb);
    const double best_here = spin_log_likelihood(na, nb, m.r_z);
    double grid_best = -1e300;
    for (int k = 0; k <= 20000; ++k) {
      grid_best = std::max(grid_best, spin_log_likelihood(na, nb, -1.0 + k * 1e-4));
    }
    CHECK(best_here >= grid_best - 1e-12);
    double grid_p = -1e300;
    for (int k = 0; k <= 10000; ++k) grid_p = std::max(grid_p, bernoulli_log_likelihood(na, nb, k * 1e-4));
    CHECK(bernoulli_log_likelihood(na, nb, m.p_hat) >= grid_p - 1e-12);
  }
}

TEST_CASE("Bayesian discrimination") {
  DiscriminationProblem id{{0.5, 0.5}, {}, constant_cost(2, 3.0), Eigen::MatrixXd::Identity(2, 2)};
  const DiscriminationResult r0 = discrimination_cost(id);
  CHECK(r0.bayes_cost == doctest::Approx(0.0));
  CHECK(r0.error_probability == doctest::Approx(0.0));

  for (int n = 2; n <= 5; ++n) {
    DiscriminationProblem u{std::vector<double>(n, 1.0 / n), {}, constant_cost(n, 2.5),
                            Eigen::MatrixXd::Constant(n, n, 1.0 / n)};
    const DiscriminationResult r = discrimination_cost(u);
    CHECK(std::abs(r.error_probability - (1.0 - 1.0 / n)) < 1e-12);
    CHECK(std::abs(r.bayes_cost - 2.5 * (1.0 - 1.0 / n)) < 1e-12);
  }

  qstate::RandomSource rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 4;
    std::vector<double> pri(n);
    double total = 0;
    for (auto& x : pri) total += (x = rng.uniform() + 0.01);
    for (auto& x : pri) x /= total;
    Eigen::MatrixXd h(n, n);
    for (int k = 0; k < n; ++k) {
      for (int m = 0; m < n; ++m) h(m, k) = rng.uniform();
      h.col(k) /= h.col(k).sum();
    }
    const double c = 0.5 + rng.uniform() * 3;
    const DiscriminationResult r = discrimination_cost({pri, {}, constant_cost(n, c), h});
    CHECK(std::abs(r.bayes_cost - c * r.error_probability) < 1e-12);
  }

  // Measuring in the computational basis tells |0> and |1> apart perfectly.
  const std::vector<DensityMatrix> states = {DensityMatrix::pure(qubit(1, 0)), DensityMatrix::pure(qubit(0, 1))};
  const Eigen::MatrixXd h = channel_from_measurement(states, {qubit(1, 0), qubit(0, 1)});
  CHECK(h.isApprox(Eigen::MatrixXd::Identity(2, 2)));

  DiscriminationProblem bad{{0.5, 0.6}, {}, constant_cost(2, 1), Eigen::MatrixXd::Identity(2, 2)};
  CHECK_THROWS_AS(validate(bad), DomainError);
  bad.priors = {0.5, 0.5};
  bad.channel << 0.5, 0.5, 0.4, 0.5;
  CHECK_THROWS_AS(validate(bad), DomainError);
}

TEST_CASE("universal cloner") {
  const CloneResult zero = uqcm_clone(qubit(1, 0));
  CHECK(std::abs(zero.clone_a(0, 0).real() - 5.0 / 6.0) < 1e-12);
  CHECK(std::abs(zero.clone_a(1, 1).real() - 1.0 / 6.0) < 1e-12);
  CHECK(std::abs(zero.clone_a(0, 1)) < 1e-12);

  CHECK(uqcm_unitary().unitarity_defect() < 1e-12);
  qstate::RandomSource rng(41);
  const qstate::UnitaryMatrix w = [&] {
    Eigen::MatrixXcd m(2, 2);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) m(i, j) = Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
    return qstate::UnitaryMatrix(qr.householderQ() * Eigen::MatrixXcd::Identity(2, 2));
  }();
  for (int trial = 0; trial < 1000; ++trial) {
    const StateVector psi = random_qubit(rng);
    const CloneResult c = uqcm_clone(psi);
    CHECK(std::abs(c.fidelity - 5.0 / 6.0) < 1e-9);
    CHECK(std::abs(c.eta - 2.0 / 3.0) < 1e-9);
    CHECK(c.clone_a.matrix().isApprox(c.clone_b.matrix(), 1e-12));
    // Clone equals (2/3)|psi><psi| + (1/3)(1/2).
    const Eigen::MatrixXcd want =
        (2.0 / 3.0) * DensityMatrix::pure(psi).matrix() + Eigen::MatrixXcd::Identity(2, 2) / 6.0;
    CHECK((c.clone_a.matrix() - want).cwiseAbs().maxCoeff() < 1e-12);
    if (trial % 50 == 0) {
      const CloneResult other = uqcm_clone(psi, w);
      CHECK((other.clone_a.matrix() - c.clone_a.matrix()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  CHECK_THROWS_AS(uqcm_clone(qstate::basis_state(qubits(2), {0, 0})), DomainError);
}
