#pragma once

#include <optional>

#include "qugame/cgame/bimatrix.hpp"
#include "qugame/qgames/report.hpp"

namespace qugame::qgames {

/// Spin up u = |0>, spin down d = |1>.
StateVector spin_up();
StateVector spin_down();

/// Bob, Alice, Bob act on the electron and it is measured. Alice wins +1 on d
/// and loses 1 on u. forced selects the measured outcome.
GameReport spin_flip_play(const UnitaryMatrix& bob1, const UnitaryMatrix& alice, const UnitaryMatrix& bob2,
                          qstate::RandomSource& rng, const std::optional<StateVector>& initial = std::nullopt,
                          std::optional<int> forced = std::nullopt);

/// Alice's expected payoff when she mixes over {1, sigma_x}, computed exactly.
double spin_flip_expected(const cgame::MixedStrategy& alice_mix, const UnitaryMatrix& bob1,
                          const UnitaryMatrix& bob2, const StateVector& initial);

/// Zero-sum payoffs to Alice for classical moves. Rows are Alice's {I, X};
/// columns are Bob's pairs {I.I, I.X, X.I, X.X}, written last move first.
cgame::Bimatrix spin_flip_table(const StateVector& initial);

}  // namespace qugame::qgames
