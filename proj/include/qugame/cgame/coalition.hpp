#pragma once

#include <cstdint>
#include <vector>

namespace qugame::cgame {

/// Characteristic function v over player subsets, stored as a table indexed
/// by bitmask (bit i set when player i is in the coalition).
class CharacteristicGame {
 public:
  /// Throws DomainError unless values has 2^n entries, n <= 16 and v(empty) == 0.
  CharacteristicGame(int n_players, std::vector<double> values);

  int players() const { return n_; }
  double value(std::uint32_t coalition) const { return v_[coalition]; }
  double grand_value() const { return v_.back(); }

 private:
  int n_;
  std::vector<double> v_;
};

/// True when every coalition receives at least its value and the grand
/// coalition's value is distributed exactly.
bool core_check(const CharacteristicGame& g, const std::vector<double>& imputation, double tol = 1e-9);

/// v(S) = 0 except v(N) = 1.
CharacteristicGame pseudo_telepathy_game(int n_players);

struct CoreProbe {
  bool found = false;
  std::vector<double> witness;
  long points_checked = 0;
};

/// Searches allocations v(N) k / grid with nonnegative integers k summing to
/// grid. Approximate: an empty result does not prove the core empty.
CoreProbe probe_core(const CharacteristicGame& g, int grid);

}  // namespace qugame::cgame
