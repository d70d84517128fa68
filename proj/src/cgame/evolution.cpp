#include "qugame/cgame/evolution.hpp"

#include <cmath>

#include "qugame/errors.hpp"

namespace qugame::cgame {

EssResult ess_test(const Bimatrix& g, int incumbent, int mutant, double eta) {
  if (!g.is_symmetric()) throw DomainError("ESS test needs a symmetric game (a == b^T)");
  if (!(eta > 0.0 && eta < 1.0)) throw DomainError("eta must lie in (0,1)");
  const int n = g.rows();
  if (incumbent < 0 || incumbent >= n || mutant < 0 || mutant >= n) throw DomainError("move index out of range");
  const Eigen::MatrixXd& pi = g.a();
  const int i = incumbent;
  const int j = mutant;
  auto fit_i = [&](double e) { return (1 - e) * pi(i, i) + e * pi(i, j); };
  auto fit_j = [&](double e) { return (1 - e) * pi(j, i) + e * pi(j, j); };
  auto margin = [&](double e) { return fit_i(e) - fit_j(e); };

  EssResult out;
  out.fitness_incumbent = fit_i(eta);
  out.fitness_mutant = fit_j(eta);
  out.stable_at_eta = margin(eta) > kPayoffTolerance;

  const double first = pi(i, i) - pi(j, i);
  const double second = pi(i, j) - pi(j, j);
  out.stable = first > kPayoffTolerance || (std::abs(first) <= kPayoffTolerance && second > kPayoffTolerance);
  if (!out.stable) return out;
  if (margin(1.0) > 0.0) {
    out.invasion_barrier = 1.0;
    return out;
  }
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-7) {
    const double mid = 0.5 * (lo + hi);
    (margin(mid) > 0.0 ? lo : hi) = mid;
  }
  out.invasion_barrier = lo;
  return out;
}

bool is_ess(const Bimatrix& g, int move) {
  for (int j = 0; j < g.rows(); ++j) {
    if (j != move && !ess_test(g, move, j, 0.5).stable) return false;
  }
  return true;
}

}  // namespace qugame::cgame
