#pragma once

#include <array>
#include <string>
#include <vector>

#include "qugame/cgame/bimatrix.hpp"
#include "qugame/cgame/equilibria.hpp"
#include "qugame/qgames/report.hpp"

namespace qugame::qgames {

/// (1 + i sigma_x (x) sigma_x) / sqrt2. Throws DomainError unless n == 2.
UnitaryMatrix ewl_entangler(int n = 2);

struct EwlOutcome {
  double payoff_a = 0.0;
  double payoff_b = 0.0;
  /// U^dagger (uA (x) uB) U |00>.
  StateVector final_state;
  /// Probabilities of |00>, |01>, |10>, |11>.
  std::array<double, 4> probabilities{};
};

/// Throws DomainError unless both moves are 2x2 and payoffs is 2x2.
EwlOutcome ewl_play(const UnitaryMatrix& ua, const UnitaryMatrix& ub, const cgame::Bimatrix& payoffs);

struct MoveSet {
  std::vector<std::string> labels;
  std::vector<UnitaryMatrix> moves;
};

/// Moves by gate name, e.g. {"I", "X", "H", "Z"}. Throws DomainError on an unknown name.
MoveSet move_set(const std::vector<std::string>& names);

/// Classical payoff table of the quantum game over the move grid.
cgame::Bimatrix ewl_table(const MoveSet& moves, const cgame::Bimatrix& payoffs);

/// One sampled round with a full transcript.
GameReport ewl_round(const std::string& game, const std::string& label_a, const UnitaryMatrix& ua,
                     const std::string& label_b, const UnitaryMatrix& ub, const cgame::Bimatrix& payoffs,
                     qstate::RandomSource& rng, std::optional<int> forced = std::nullopt);

/// Mixed equilibrium when both players randomize over {1, sigma_z} in the
/// quantum battle of the sexes.
cgame::MixedNash quantum_bos_mixed(double alpha, double beta, double gamma);

}  // namespace qugame::qgames
