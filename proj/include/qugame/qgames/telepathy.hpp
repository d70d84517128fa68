#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qugame/qgames/report.hpp"

namespace qugame::qgames {

inline constexpr int kMaxTelepathyPlayers = 16;

struct TelepathyRound {
  std::vector<int> x;
  std::vector<int> y;
  bool win = false;
  GameReport report;
};

/// Players share b0^N, apply diag(1, i) when x_i = 1, apply H and measure.
/// They win when sum y mod 2 equals (sum x / 2) mod 2. forced picks the
/// measured register index. Throws DomainError for N < 2, non-bits or an odd
/// input sum, ResourceError past kMaxTelepathyPlayers.
TelepathyRound pseudo_telepathy_round(const std::vector<int>& x, qstate::RandomSource& rng,
                                      std::optional<std::uint64_t> forced = std::nullopt);

/// Win condition of the game.
bool telepathy_wins(const std::vector<int>& x, const std::vector<int>& y);

}  // namespace qugame::qgames
