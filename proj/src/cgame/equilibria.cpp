#include "qugame/cgame/equilibria.hpp"

#include <cmath>

#include "qugame/errors.hpp"

namespace qugame::cgame {

std::vector<Cell> pure_nash(const Bimatrix& g) {
  std::vector<Cell> out;
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < g.cols(); ++j) {
      const bool row_best = g.a().col(j).maxCoeff() <= g.a()(i, j) + kPayoffTolerance;
      const bool col_best = g.b().row(i).maxCoeff() <= g.b()(i, j) + kPayoffTolerance;
      if (row_best && col_best) out.push_back({i, j});
    }
  }
  return out;
}

Dominance dominant_moves(const Bimatrix& g) {
  Dominance d;
  for (int i = 0; i < g.rows(); ++i) {
    bool dominant = true;
    for (int k = 0; k < g.rows() && dominant; ++k) {
      if (k == i) continue;
      dominant = ((g.a().row(i) - g.a().row(k)).array() >= -kPayoffTolerance).all();
    }
    if (dominant) d.row.push_back(i);
  }
  for (int j = 0; j < g.cols(); ++j) {
    bool dominant = true;
    for (int k = 0; k < g.cols() && dominant; ++k) {
      if (k == j) continue;
      dominant = ((g.b().col(j) - g.b().col(k)).array() >= -kPayoffTolerance).all();
    }
    if (dominant) d.col.push_back(j);
  }
  return d;
}

std::vector<std::vector<ParetoFlags>> pareto_analysis(const Bimatrix& g) {
  const double tol = kPayoffTolerance;
  std::vector<std::vector<ParetoFlags>> out(static_cast<std::size_t>(g.rows()),
                                            std::vector<ParetoFlags>(static_cast<std::size_t>(g.cols())));
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < g.cols(); ++j) {
      const double pa = g.a()(i, j);
      const double pb = g.b()(i, j);
      ParetoFlags& f = out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      bool tradeoff_only = true;
      for (int k = 0; k < g.rows(); ++k) {
        for (int l = 0; l < g.cols(); ++l) {
          const double qa = g.a()(k, l);
          const double qb = g.b()(k, l);
          const bool weakly = qa >= pa - tol && qb >= pb - tol;
          const bool strictly = qa > pa + tol || qb > pb + tol;
          if (weakly && strictly && !f.jointly_dominated) {
            f.jointly_dominated = true;
            f.dominated_by = Cell{k, l};
          }
          // Raising one payoff must cost the other party something.
          if ((qa > pa + tol && qb >= pb - tol) || (qb > pb + tol && qa >= pa - tol)) tradeoff_only = false;
        }
      }
      f.pareto_optimal = !f.jointly_dominated && tradeoff_only;
    }
  }
  return out;
}

MixedNash mixed_nash_2x2(const Bimatrix& g) {
  if (g.rows() != 2 || g.cols() != 2) throw DomainError("mixed_nash_2x2 needs a 2x2 game");
  const Eigen::MatrixXd& a = g.a();
  const Eigen::MatrixXd& b = g.b();
  MixedNash out;
  out.pure_equilibria = pure_nash(g);
  // Column player indifferent between columns fixes p; row player indifferent fixes q.
  const double den_p = b(0, 0) - b(1, 0) - b(0, 1) + b(1, 1);
  const double den_q = a(0, 0) - a(0, 1) - a(1, 0) + a(1, 1);
  if (std::abs(den_p) < kPayoffTolerance || std::abs(den_q) < kPayoffTolerance) {
    out.note = "indifference conditions are degenerate";
    return out;
  }
  out.p = (b(1, 1) - b(1, 0)) / den_p;
  out.q = (a(1, 1) - a(0, 1)) / den_q;
  const bool inside = out.p > 0.0 && out.p < 1.0 && out.q > 0.0 && out.q < 1.0;
  if (!inside) {
    out.note = "indifference solution lies outside (0,1); only pure equilibria exist";
    return out;
  }
  out.interior = true;
  const auto [pa, pb] = expected_payoff(g, MixedStrategy({out.p, 1.0 - out.p}), MixedStrategy({out.q, 1.0 - out.q}));
  out.payoff_a = pa;
  out.payoff_b = pb;
  return out;
}

}  // namespace qugame::cgame
