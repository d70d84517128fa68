#pragma once

#include "qugame/cgame/bimatrix.hpp"

namespace qugame::cgame {

struct EssResult {
  /// Fitness of incumbent and mutant against the (1 - eta) incumbent + eta mutant population.
  double fitness_incumbent = 0.0;
  double fitness_mutant = 0.0;
  bool stable_at_eta = false;
  /// Stable for all sufficiently small eta.
  bool stable = false;
  /// Largest eta0 such that the incumbent stays fitter on (0, eta0); 0 when unstable.
  double invasion_barrier = 0.0;
};

/// Throws DomainError unless a == b^T and 0 < eta < 1.
EssResult ess_test(const Bimatrix& g, int incumbent, int mutant, double eta);

/// Stable against every other pure move.
bool is_ess(const Bimatrix& g, int move);

}  // namespace qugame::cgame
