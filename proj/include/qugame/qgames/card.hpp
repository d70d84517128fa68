#pragma once

#include <array>
#include <optional>

#include "qugame/qgames/report.hpp"

namespace qugame::qgames {

/// Card kinds: circles on both sides, dots on both sides, one of each.
enum class Card { kCircles, kDots, kMixed };

/// Cards in box positions 0..2 and the face the mixed card shows (0 circle, 1 dot).
struct CardDeal {
  std::array<Card, 3> cards{};
  int mixed_up = 0;
};

/// Up faces r_k. Throws DomainError unless the deal holds each card once.
std::array<int, 3> card_faces(const CardDeal& deal);

/// diag(1, e^{i pi r}).
UnitaryMatrix card_phase(int r);

/// (H U_0 H) (x) (H U_1 H) (x) (H U_2 H) |000>, which equals |r0 r1 r2>.
StateVector card_query(const std::array<int, 3>& r);

/// Bob queries the box, draws card draw and withdraws with payoff 0 when its
/// up face differs from the majority face. Otherwise the drawn card is the
/// mixed one with probability 1/2: Bob wins 1 if so and loses 1 if not. rng
/// picks which majority-face position holds the mixed card unless
/// mixed_position is forced. Throws DomainError on an impossible face pattern.
GameReport card_game_round(const std::array<int, 3>& r, int draw, qstate::RandomSource& rng,
                           std::optional<int> mixed_position = std::nullopt);

/// Bob's payoff for a fully specified deal and draw under the same policy.
int card_payoff(const CardDeal& deal, int draw);

struct CardEnumeration {
  int cases = 0;
  double total = 0.0;
  double mean = 0.0;
};

/// Every ordering and orientation of the three cards and every draw.
CardEnumeration card_game_enumeration();

}  // namespace qugame::qgames
