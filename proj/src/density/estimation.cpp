#include "qugame/density/estimation.hpp"

#include <cmath>
#include <limits>

#include "qugame/errors.hpp"

namespace qugame::density {

namespace {

double weighted_log(double weight, double x) {
  if (weight == 0.0) return 0.0;
  if (x <= 0.0) return -std::numeric_limits<double>::infinity();
  return weight * std::log(x);
}

void check_counts(long n_a, long n_b) {
  if (n_a < 0 || n_b < 0) throw DomainError("counts must be nonnegative");
  if (n_a + n_b == 0) throw DomainError("at least one measurement is needed");
}

}  // namespace

MleEstimate mle_bernoulli(long n_a, long n_b) {
  check_counts(n_a, n_b);
  const double n = static_cast<double>(n_a + n_b);
  Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(2, 2);
  diag(0, 0) = static_cast<double>(n_a) / n;
  diag(1, 1) = static_cast<double>(n_b) / n;
  return MleEstimate{n_a, n_b, static_cast<double>(n_b) / n, static_cast<double>(n_a - n_b) / n,
                     DensityMatrix(diag)};
}

double bernoulli_log_likelihood(long n_a, long n_b, double p) {
  check_counts(n_a, n_b);
  return weighted_log(static_cast<double>(n_b), p) + weighted_log(static_cast<double>(n_a), 1.0 - p);
}

double spin_log_likelihood(long n_a, long n_b, double r_z) {
  check_counts(n_a, n_b);
  const double n = static_cast<double>(n_a + n_b);
  return weighted_log(static_cast<double>(n_a) / n, 0.5 * (1.0 + r_z)) +
         weighted_log(static_cast<double>(n_b) / n, 0.5 * (1.0 - r_z));
}

void validate(const DiscriminationProblem& p) {
  const auto n = static_cast<Eigen::Index>(p.priors.size());
  if (n == 0) throw DomainError("discrimination needs at least one candidate state");
  if (!p.states.empty() && static_cast<Eigen::Index>(p.states.size()) != n) {
    throw DomainError("one prior per candidate state is required");
  }
  double total = 0.0;
  for (double e : p.priors) {
    if (!(e >= 0.0)) throw DomainError("priors must be nonnegative");
    total += e;
  }
  if (std::abs(total - 1.0) > kTraceTolerance) throw DomainError("priors must sum to 1");
  if (p.cost.rows() != n || p.cost.cols() != n) throw DomainError("cost matrix must be N x N");
  if (p.channel.rows() != n || p.channel.cols() != n) throw DomainError("channel matrix must be N x N");
  if ((p.channel.array() < -kTraceTolerance).any()) throw DomainError("channel probabilities must be nonnegative");
  for (Eigen::Index k = 0; k < n; ++k) {
    if (std::abs(p.channel.col(k).sum() - 1.0) > 1e-9) {
      throw DomainError("channel column " + std::to_string(k) + " does not sum to 1");
    }
  }
}

DiscriminationResult discrimination_cost(const DiscriminationProblem& p) {
  validate(p);
  DiscriminationResult r;
  double correct = 0.0;
  for (Eigen::Index k = 0; k < p.channel.cols(); ++k) {
    const double eta = p.priors[static_cast<std::size_t>(k)];
    correct += eta * p.channel(k, k);
    for (Eigen::Index m = 0; m < p.channel.rows(); ++m) r.bayes_cost += eta * p.cost(m, k) * p.channel(m, k);
  }
  r.error_probability = 1.0 - correct;
  return r;
}

Eigen::MatrixXd channel_from_measurement(const std::vector<DensityMatrix>& states,
                                         const std::vector<StateVector>& basis) {
  if (states.size() != basis.size()) throw DomainError("need one measurement outcome per candidate state");
  const auto n = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXd h(n, n);
  for (Eigen::Index m = 0; m < n; ++m) {
    for (Eigen::Index k = 0; k < n; ++k) {
      h(m, k) = measure_prob(states[static_cast<std::size_t>(k)], basis[static_cast<std::size_t>(m)]);
    }
  }
  return h;
}

Eigen::MatrixXd constant_cost(int n, double c) {
  if (n < 1) throw DomainError("cost matrix needs at least one state");
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(n, n, c);
  m.diagonal().setZero();
  return m;
}

}  // namespace qugame::density
