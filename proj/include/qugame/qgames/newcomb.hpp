#pragma once

#include "qugame/cgame/bimatrix.hpp"
#include "qugame/qgames/report.hpp"

namespace qugame::qgames {

/// Dollar payoff to Alice for |alice, sb>: 00 one million, 01 nothing,
/// 10 one million plus a thousand, 11 a thousand.
double newcomb_payoff(int alice, int sb);

/// Alice's payoffs with rows {B2 only, both} and columns {SB predicts B2 only, SB predicts both}.
cgame::Bimatrix newcomb_table();

/// The quantum game: SB prepares |sb sb>, applies H on Alice's qubit, Alice
/// flips with probability w, SB applies H again. By default Alice's step is a
/// classical mixture of the two unitary branches. With coherent_shorthand the
/// operator w sigma_x + (1 - w) 1 acts on the amplitudes directly, which is
/// not unitary; the raw amplitudes are reported and the distribution is
/// renormalized when it does not vanish.
GameReport newcomb_play(int sb_choice, double w, bool coherent_shorthand = false);

}  // namespace qugame::qgames
