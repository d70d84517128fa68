#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qugame/cgame/bimatrix.hpp"

namespace qugame::cgame {

struct Cell {
  int row = 0;
  int col = 0;
  bool operator==(const Cell&) const = default;
};

/// Cells where neither player gains by a unilateral switch (weak inequalities).
std::vector<Cell> pure_nash(const Bimatrix& g);

struct Dominance {
  /// Row moves weakly dominating every other row against every column.
  std::vector<int> row;
  std::vector<int> col;
};

Dominance dominant_moves(const Bimatrix& g);

struct ParetoFlags {
  /// Some other cell is at least as good for both and better for one.
  bool jointly_dominated = false;
  std::optional<Cell> dominated_by;
  /// Not jointly dominated, and no cell raises one payoff without lowering the other.
  bool pareto_optimal = false;
};

/// Flags for every cell, indexed [row][col].
std::vector<std::vector<ParetoFlags>> pareto_analysis(const Bimatrix& g);

struct MixedNash {
  /// p is the row player's weight on row 0, q the column player's on column 0.
  bool interior = false;
  double p = 0.0;
  double q = 0.0;
  double payoff_a = 0.0;
  double payoff_b = 0.0;
  /// Why no interior solution exists, when it does not.
  std::string note;
  std::vector<Cell> pure_equilibria;
};

/// Interior equilibrium of a 2x2 game from the two indifference conditions.
/// Throws DomainError for other shapes.
MixedNash mixed_nash_2x2(const Bimatrix& g);

}  // namespace qugame::cgame
