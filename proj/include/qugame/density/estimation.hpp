#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qugame/density/density_matrix.hpp"

namespace qugame::density {

struct MleEstimate {
  long n_a = 0;
  long n_b = 0;
  /// Estimated probability of |1>, n_b / n.
  double p_hat = 0.0;
  /// z component of the Bloch vector maximizing the spin likelihood, (n_a - n_b) / n.
  double r_z = 0.0;
  /// diag(n_a / n, n_b / n).
  DensityMatrix statistical;
};

/// n_a outcomes |0> and n_b outcomes |1>. Throws DomainError on negative counts or n == 0.
MleEstimate mle_bernoulli(long n_a, long n_b);

/// log of p^{n_b} (1 - p)^{n_a}.
double bernoulli_log_likelihood(long n_a, long n_b, double p);

/// Per-sample log likelihood of z-spin counts under rho = (1 + r.sigma)/2:
/// (n_a / n) log((1 + r_z)/2) + (n_b / n) log((1 - r_z)/2).
double spin_log_likelihood(long n_a, long n_b, double r_z);

/// Bayesian discrimination between candidate states. channel(m, k) is the
/// probability h(a_m | rho_k) of outcome a_m when rho_k was sent, and
/// cost(m, k) the price of guessing m when k was sent.
struct DiscriminationProblem {
  std::vector<double> priors;
  std::vector<DensityMatrix> states;
  Eigen::MatrixXd cost;
  Eigen::MatrixXd channel;
};

/// Throws DomainError when priors do not sum to 1, a channel column does not
/// sum to 1, entries are negative or shapes disagree.
void validate(const DiscriminationProblem& p);

struct DiscriminationResult {
  /// sum_{mk} eta_k c_mk h(a_m | rho_k).
  double bayes_cost = 0.0;
  /// 1 - sum_k eta_k h(a_k | rho_k).
  double error_probability = 0.0;
};

DiscriminationResult discrimination_cost(const DiscriminationProblem& p);

/// Channel of a projective measurement: h(a_m | rho_k) = <b_m| rho_k |b_m>.
Eigen::MatrixXd channel_from_measurement(const std::vector<DensityMatrix>& states,
                                         const std::vector<StateVector>& basis);

/// Cost matrix with zero diagonal and c elsewhere.
Eigen::MatrixXd constant_cost(int n, double c);

}  // namespace qugame::density
