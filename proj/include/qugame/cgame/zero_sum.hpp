#pragma once

#include <utility>
#include <vector>

#include "qugame/cgame/bimatrix.hpp"

namespace qugame::cgame {

struct ZeroSumSolution {
  double value = 0.0;
  MixedStrategy row;
  MixedStrategy col;
  bool saddle_point = false;
  /// min over columns of the row strategy's payoff, and max over rows of the column strategy's.
  double max_min = 0.0;
  double min_max = 0.0;
};

/// Value and optimal strategies of a zero-sum game that reduces to at most
/// 2x2 after merging duplicate rows and columns. Weight on merged moves is
/// split evenly. Throws DomainError when b != -a or the reduced game is larger.
ZeroSumSolution zero_sum_value_2x2(const Bimatrix& g);

struct PayoffProbability {
  int payoff = 0;
  double probability = 0.0;
};

/// Payoffs 2x - n for x wins in n games won with probability p each.
std::vector<PayoffProbability> repeated_payoff_distribution(int n, double p);

}  // namespace qugame::cgame
