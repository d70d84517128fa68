#include "qugame/cgame/zero_sum.hpp"

#include <cmath>

#include "qugame/errors.hpp"

namespace qugame::cgame {

namespace {

// Groups identical rows (or columns when by_col) and returns, per group, the member indices.
std::vector<std::vector<int>> groups_of(const Eigen::MatrixXd& m, bool by_col) {
  std::vector<std::vector<int>> groups;
  const int n = static_cast<int>(by_col ? m.cols() : m.rows());
  for (int i = 0; i < n; ++i) {
    bool placed = false;
    for (auto& grp : groups) {
      const int r = grp.front();
      const double diff = by_col ? (m.col(i) - m.col(r)).cwiseAbs().maxCoeff()
                                 : (m.row(i) - m.row(r)).cwiseAbs().maxCoeff();
      if (diff <= kPayoffTolerance) {
        grp.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({i});
  }
  return groups;
}

MixedStrategy spread(const std::vector<std::vector<int>>& groups, const std::vector<double>& reduced, int n) {
  std::vector<double> p(static_cast<std::size_t>(n), 0.0);
  for (std::size_t k = 0; k < groups.size(); ++k) {
    for (int i : groups[k]) p[static_cast<std::size_t>(i)] = reduced[k] / static_cast<double>(groups[k].size());
  }
  return MixedStrategy(std::move(p));
}

}  // namespace

ZeroSumSolution zero_sum_value_2x2(const Bimatrix& g) {
  if (!g.is_zero_sum()) throw DomainError("game is not zero-sum");
  const auto row_groups = groups_of(g.a(), false);
  const auto col_groups = groups_of(g.a(), true);
  const int m = static_cast<int>(row_groups.size());
  const int n = static_cast<int>(col_groups.size());
  if (m > 2 || n > 2) throw DomainError("reduced zero-sum game is larger than 2x2");
  Eigen::MatrixXd a(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = g.a()(row_groups[static_cast<std::size_t>(i)].front(),
                                                col_groups[static_cast<std::size_t>(j)].front());
  }

  std::vector<double> p(static_cast<std::size_t>(m), 0.0);
  std::vector<double> q(static_cast<std::size_t>(n), 0.0);
  bool saddle = false;
  double value = 0.0;
  // A saddle point is the minimum of its row and the maximum of its column.
  for (int i = 0; i < m && !saddle; ++i) {
    for (int j = 0; j < n && !saddle; ++j) {
      if (a(i, j) <= a.row(i).minCoeff() + kPayoffTolerance && a(i, j) >= a.col(j).maxCoeff() - kPayoffTolerance) {
        saddle = true;
        value = a(i, j);
        p[static_cast<std::size_t>(i)] = 1.0;
        q[static_cast<std::size_t>(j)] = 1.0;
      }
    }
  }
  if (!saddle) {
    // Without a saddle point the game is 2x2 and both players mix.
    const double den = a(0, 0) - a(0, 1) - a(1, 0) + a(1, 1);
    p[0] = (a(1, 1) - a(1, 0)) / den;
    p[1] = 1.0 - p[0];
    q[0] = (a(1, 1) - a(0, 1)) / den;
    q[1] = 1.0 - q[0];
    value = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) / den;
  }

  MixedStrategy row = spread(row_groups, p, g.rows());
  MixedStrategy col = spread(col_groups, q, g.cols());
  const Eigen::VectorXd rv = row.vector();
  const Eigen::VectorXd cv = col.vector();
  const double max_min = (rv.transpose() * g.a()).minCoeff();
  const double min_max = (g.a() * cv).maxCoeff();
  if (std::abs(max_min - min_max) > 1e-9 || std::abs(max_min - value) > 1e-9) {
    throw DomainError("minimax check failed");
  }
  return ZeroSumSolution{value, std::move(row), std::move(col), saddle, max_min, min_max};
}

std::vector<PayoffProbability> repeated_payoff_distribution(int n, double p) {
  if (n < 1) throw DomainError("game count must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("win probability must lie in [0,1]");
  std::vector<PayoffProbability> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int x = 0; x <= n; ++x) {
    // log-space binomial keeps large n finite.
    const double log_c = std::lgamma(n + 1.0) - std::lgamma(x + 1.0) - std::lgamma(n - x + 1.0);
    double prob;
    if ((p == 0.0 && x > 0) || (p == 1.0 && x < n)) {
      prob = 0.0;
    } else {
      const double lp = x > 0 ? x * std::log(p) : 0.0;
      const double lq = n - x > 0 ? (n - x) * std::log1p(-p) : 0.0;
      prob = std::exp(log_c + lp + lq);
    }
    out.push_back({2 * x - n, prob});
  }
  return out;
}

}  // namespace qugame::cgame
