#include "qugame/qalgo/grover.hpp"

#include <cmath>
#include <numbers>

#include "qugame/errors.hpp"
#include "qugame/qstate/gates.hpp"

namespace qugame::qalgo {

namespace {

constexpr std::uint64_t kExactAngleLimit = std::uint64_t{1} << 20;
constexpr std::size_t kTrajectoryBudget = std::size_t{1} << 24;

void check_target(int n, std::uint64_t a) {
  if (n < 1) throw DomainError("search register needs at least one qubit");
  if (n < 64 && a >= (std::uint64_t{1} << n)) {
    throw DomainError("target " + std::to_string(a) + " is outside a " + std::to_string(n) + "-qubit register");
  }
}

int round_half_away(double x) {
  const double f = std::floor(x);
  if (std::abs(x - f - 0.5) < 1e-9) return static_cast<int>(f + 1.0);
  return static_cast<int>(std::lround(x));
}

}  // namespace

double grover_theta(std::uint64_t search_size) {
  if (search_size < 2) throw DomainError("search space needs at least two entries");
  return std::asin(1.0 / std::sqrt(static_cast<double>(search_size)));
}

int grover_iterations(std::uint64_t search_size) {
  if (search_size < 2) throw DomainError("search space needs at least two entries");
  double x;
  if (search_size <= kExactAngleLimit) {
    x = std::numbers::pi / (4.0 * grover_theta(search_size)) - 0.5;
  } else {
    x = std::numbers::pi * std::sqrt(static_cast<double>(search_size)) / 4.0 - 0.5;
  }
  return std::max(0, round_half_away(x));
}

GroverOperators grover_operators(int n, std::uint64_t a) {
  check_target(n, a);
  const qstate::UnitaryMatrix w = qstate::walsh(n);
  const auto dim = static_cast<Eigen::Index>(w.dim());
  Eigen::MatrixXcd oracle = Eigen::MatrixXcd::Identity(dim, dim);
  oracle(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a)) = -1.0;
  Eigen::MatrixXcd f0 = Eigen::MatrixXcd::Identity(dim, dim);
  f0(0, 0) = -1.0;
  const Eigen::MatrixXcd diffusion = -(w.matrix() * f0 * w.matrix());
  return GroverOperators{UnitaryMatrix(oracle), UnitaryMatrix(diffusion)};
}

GroverRun grover_search(int n, std::uint64_t a, const GroverOptions& options) {
  check_target(n, a);
  const qstate::Dims dims = qstate::qubits(n);
  const std::size_t size = qstate::total_dim(dims);
  GroverRun run;
  run.n = n;
  run.target = a;
  run.theta = grover_theta(size);
  run.iterations = options.iterations.value_or(grover_iterations(size));
  if (run.iterations < 0) throw DomainError("iteration count must be non-negative");
  if (options.keep_trajectory && size * (static_cast<std::size_t>(run.iterations) + 1) > kTrajectoryBudget) {
    throw ResourceError("Grover trajectory would hold more than 2^24 amplitudes");
  }

  Eigen::VectorXcd amps = Eigen::VectorXcd::Constant(static_cast<Eigen::Index>(size),
                                                     1.0 / std::sqrt(static_cast<double>(size)));
  const auto ai = static_cast<Eigen::Index>(a);
  auto record = [&]() {
    run.target_probability.push_back(std::norm(amps[ai]));
    if (options.keep_trajectory) run.trajectory.emplace_back(dims, amps);
  };
  record();
  for (int k = 0; k < run.iterations; ++k) {
    amps[ai] = -amps[ai];
    // -W U_f0 W is inversion about the mean: a_x -> 2<a> - a_x.
    const qstate::Complex twice_mean = 2.0 * amps.mean();
    amps = (twice_mean - amps.array()).matrix();
    record();
  }
  run.success_probability = std::norm(amps[ai]);
  if (!options.keep_trajectory) run.trajectory.emplace_back(dims, amps);
  return run;
}

UnitaryMatrix bit_oracle(int n, const std::function<int(std::uint64_t)>& f) {
  if (n < 1 || n + 1 > qstate::limits().max_matrix_qubits) {
    throw ResourceError("bit oracle register exceeds the matrix cap");
  }
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<int> perm(static_cast<std::size_t>(2 * size));
  for (std::uint64_t x = 0; x < size; ++x) {
    const int fx = f(x) & 1;
    for (int y = 0; y < 2; ++y) perm[static_cast<std::size_t>(2 * x + static_cast<std::uint64_t>(y))] =
        static_cast<int>(2 * x + static_cast<std::uint64_t>(y ^ fx));
  }
  return qstate::permutation(perm);
}

}  // namespace qugame::qalgo
