#include "qugame/cgame/coalition.hpp"

#include <cmath>
#include <numeric>

#include "qugame/errors.hpp"

namespace qugame::cgame {

CharacteristicGame::CharacteristicGame(int n_players, std::vector<double> values)
    : n_(n_players), v_(std::move(values)) {
  if (n_ < 1 || n_ > 16) throw DomainError("characteristic games support 1 to 16 players");
  if (v_.size() != (std::size_t{1} << n_)) throw DomainError("characteristic table needs 2^n entries");
  if (v_.front() != 0.0) throw DomainError("v(empty set) must be 0");
}

bool core_check(const CharacteristicGame& g, const std::vector<double>& imputation, double tol) {
  if (static_cast<int>(imputation.size()) != g.players()) throw DomainError("imputation length mismatch");
  const std::uint32_t full = (std::uint32_t{1} << g.players()) - 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    double share = 0.0;
    for (int i = 0; i < g.players(); ++i) {
      if (s & (std::uint32_t{1} << i)) share += imputation[static_cast<std::size_t>(i)];
    }
    if (s == full) {
      if (std::abs(share - g.value(s)) > tol) return false;
    } else if (share < g.value(s) - tol) {
      return false;
    }
  }
  return true;
}

CharacteristicGame pseudo_telepathy_game(int n_players) {
  if (n_players < 1 || n_players > 16) throw DomainError("characteristic games support 1 to 16 players");
  std::vector<double> v(std::size_t{1} << n_players, 0.0);
  v.back() = 1.0;
  return CharacteristicGame(n_players, std::move(v));
}

CoreProbe probe_core(const CharacteristicGame& g, int grid) {
  if (grid < 1) throw DomainError("grid resolution must be positive");
  const int n = g.players();
  CoreProbe out;
  std::vector<int> k(static_cast<std::size_t>(n), 0);
  std::vector<double> alloc(static_cast<std::size_t>(n));
  const long limit = 5'000'000;
  // Enumerate compositions of grid into n nonnegative parts.
  auto visit = [&](auto&& self, int idx, int left) -> bool {
    if (out.points_checked >= limit) return false;
    if (idx == n - 1) {
      k[static_cast<std::size_t>(idx)] = left;
      for (int i = 0; i < n; ++i) alloc[static_cast<std::size_t>(i)] = g.grand_value() * k[static_cast<std::size_t>(i)] / grid;
      ++out.points_checked;
      if (core_check(g, alloc)) {
        out.found = true;
        out.witness = alloc;
        return true;
      }
      return false;
    }
    for (int c = 0; c <= left; ++c) {
      k[static_cast<std::size_t>(idx)] = c;
      if (self(self, idx + 1, left - c)) return true;
    }
    return false;
  };
  visit(visit, 0, grid);
  return out;
}

}  // namespace qugame::cgame
