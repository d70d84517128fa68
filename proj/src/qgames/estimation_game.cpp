#include "qugame/qgames/estimation_game.hpp"

#include "qugame/density/estimation.hpp"
#include "qugame/errors.hpp"

namespace qugame::qgames {

GameReport estimation_game(const StateVector& psi, long shots, double threshold, qstate::RandomSource& rng) {
  if (psi.dims() != qstate::Dims{2}) throw DomainError("the unknown state is one qubit");
  if (shots < 1) throw DomainError("at least one shot is needed");
  const double p1 = std::norm(psi[1]);
  long n_a = 0, n_b = 0;
  for (long s = 0; s < shots; ++s) (rng.uniform() < p1 ? n_b : n_a) += 1;
  const density::MleEstimate est = density::mle_bernoulli(n_a, n_b);
  const double f = density::fidelity(est.statistical, psi);

  GameReport report;
  report.game = "estimate";
  report.params = {{"shots", shots}, {"threshold", threshold}};
  report.transcript.push_back({"Alice", "prepare " + std::to_string(shots) + " copies", {}, std::nullopt, {}, {}, -1,
                               qstate::describe(psi)});
  report.transcript.push_back({"Bob", "measure each copy in the computational basis", {}, std::nullopt, {}, {}, -1,
                               std::to_string(n_a) + " x |0>, " + std::to_string(n_b) + " x |1>"});
  report.transcript.push_back({"Bob", "form the maximum-likelihood density matrix", {}, std::nullopt, {}, {}, -1, ""});
  report.details["n_a"] = n_a;
  report.details["n_b"] = n_b;
  report.details["p_hat"] = est.p_hat;
  report.details["r_z"] = est.r_z;
  report.details["fidelity"] = f;
  const bool win = f >= threshold;
  report.outcome = win ? "estimate accepted" : "estimate rejected";
  report.payoffs = {{"bob", win ? 1.0 : -1.0}, {"referee", win ? -1.0 : 1.0}};
  report.probabilities = {{"0", 1.0 - p1}, {"1", p1}};
  return report;
}

}  // namespace qugame::qgames
