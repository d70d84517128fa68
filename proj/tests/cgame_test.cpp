#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "qugame/cgame.hpp"
#include "qugame/errors.hpp"

using namespace qugame;
using namespace qugame::cgame;

namespace {

Bimatrix spin_flip_table() {
  Eigen::MatrixXd a(2, 4);
  a << -1, 1, 1, -1, 1, -1, -1, 1;
  return zero_sum({"I", "X"}, {"I,I", "I,X", "X,I", "X,X"}, a);
}

Bimatrix from_rows(const std::vector<std::vector<double>>& a, const std::vector<std::vector<double>>& b) {
  const auto m = static_cast<Eigen::Index>(a.size());
  const auto n = static_cast<Eigen::Index>(a[0].size());
  Eigen::MatrixXd ma(m, n), mb(m, n);
  std::vector<std::string> rl, cl;
  for (Eigen::Index i = 0; i < m; ++i) {
    rl.push_back("r" + std::to_string(i));
    for (Eigen::Index j = 0; j < n; ++j) {
      ma(i, j) = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      mb(i, j) = b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  for (Eigen::Index j = 0; j < n; ++j) cl.push_back("c" + std::to_string(j));
  return Bimatrix(rl, cl, ma, mb);
}

// Joint best-response fixed points by plain loops over raw arrays.
std::vector<Cell> brute_nash(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
  std::vector<Cell> out;
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(a[0].size());
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      bool stable = true;
      for (int k = 0; k < m; ++k) stable = stable && a[k][j] <= a[i][j];
      for (int l = 0; l < n; ++l) stable = stable && b[i][l] <= b[i][j];
      if (stable) out.push_back({i, j});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("bimatrix validation") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2, 2);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(2, 3);
  CHECK_THROWS_AS(Bimatrix({"a", "b"}, {"c", "d"}, a, b), DomainError);
  CHECK_THROWS_AS(Bimatrix({"a"}, {"c", "d"}, a, a), DomainError);
  CHECK_THROWS_AS(MixedStrategy({0.5, 0.6}), DomainError);
  CHECK_THROWS_AS(MixedStrategy({1.5, -0.5}), DomainError);
  CHECK_THROWS_AS(battle_of_sexes(1, 2, 3), DomainError);
}

TEST_CASE("expected payoff") {
  const auto [a0, b0] = expected_payoff(spin_flip_table(), MixedStrategy::uniform(2), MixedStrategy::uniform(4));
  CHECK(a0 == doctest::Approx(0.0));
  CHECK(b0 == doctest::Approx(0.0));
  const auto [a1, b1] = expected_payoff(prisoners_dilemma(), MixedStrategy::pure(2, 1), MixedStrategy::pure(2, 1));
  CHECK(a1 == 1.0);
  CHECK(b1 == 1.0);
  CHECK_THROWS_AS(expected_payoff(prisoners_dilemma(), MixedStrategy::uniform(3), MixedStrategy::uniform(2)),
                  DomainError);
}

TEST_CASE("expected payoff is bilinear") {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto rand_strategy = [&](int n) {
    std::vector<double> p(static_cast<std::size_t>(n));
    double s = 0;
    for (double& x : p) s += (x = u(gen));
    for (double& x : p) x /= s;
    return MixedStrategy(p);
  };
  for (int t = 0; t < 200; ++t) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Random(3, 4);
    Eigen::MatrixXd b = Eigen::MatrixXd::Random(3, 4);
    const Bimatrix g({"a", "b", "c"}, {"w", "x", "y", "z"}, a, b);
    const MixedStrategy p1 = rand_strategy(3), p2 = rand_strategy(3), q = rand_strategy(4);
    const double lam = u(gen);
    std::vector<double> mix(3);
    for (int i = 0; i < 3; ++i) mix[static_cast<std::size_t>(i)] = lam * p1[i] + (1 - lam) * p2[i];
    const auto left = expected_payoff(g, MixedStrategy(mix), q);
    const auto r1 = expected_payoff(g, p1, q);
    const auto r2 = expected_payoff(g, p2, q);
    CHECK(std::abs(left.first - (lam * r1.first + (1 - lam) * r2.first)) < 1e-12);
    CHECK(std::abs(left.second - (lam * r1.second + (1 - lam) * r2.second)) < 1e-12);
    const auto q1 = rand_strategy(4), q2 = rand_strategy(4);
    std::vector<double> cmix(4);
    for (int j = 0; j < 4; ++j) cmix[static_cast<std::size_t>(j)] = lam * q1[j] + (1 - lam) * q2[j];
    const auto cl = expected_payoff(g, p1, MixedStrategy(cmix));
    const auto s1 = expected_payoff(g, p1, q1);
    const auto s2 = expected_payoff(g, p1, q2);
    CHECK(std::abs(cl.first - (lam * s1.first + (1 - lam) * s2.first)) < 1e-12);
  }
}

TEST_CASE("prisoner's dilemma analysis") {
  const Bimatrix pd = prisoners_dilemma();
  CHECK(pure_nash(pd) == std::vector<Cell>{{1, 1}});
  const Dominance d = dominant_moves(pd);
  CHECK(d.row == std::vector<int>{1});
  CHECK(d.col == std::vector<int>{1});
  const auto flags = pareto_analysis(pd);
  CHECK(flags[1][1].jointly_dominated);
  CHECK(flags[1][1].dominated_by == Cell{0, 0});
  CHECK_FALSE(flags[1][1].pareto_optimal);
  CHECK(flags[0][0].pareto_optimal);
  CHECK_FALSE(mixed_nash_2x2(pd).interior);
}

TEST_CASE("battle of the sexes") {
  const Bimatrix bos = battle_of_sexes(3, 2, 1);
  CHECK(pure_nash(bos) == std::vector<Cell>{{0, 0}, {1, 1}});
  const Dominance d = dominant_moves(bos);
  CHECK(d.row.empty());
  CHECK(d.col.empty());
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int t = 0; t < 20; ++t) {
    std::vector<double> v = {u(gen), u(gen), u(gen)};
    std::sort(v.rbegin(), v.rend());
    const double al = v[0], be = v[1], ga = v[2];
    const MixedNash m = mixed_nash_2x2(battle_of_sexes(al, be, ga));
    REQUIRE(m.interior);
    const double den = al + be - 2 * ga;
    CHECK(std::abs(m.p - (al - ga) / den) < 1e-12);
    CHECK(std::abs(m.q - (be - ga) / den) < 1e-12);
    CHECK(std::abs(m.payoff_a - (al * be - ga * ga) / den) < 1e-12);
    CHECK(std::abs(m.payoff_b - (al * be - ga * ga) / den) < 1e-12);
  }
}

TEST_CASE("pareto edge cases") {
  const Bimatrix one = from_rows({{2}}, {{1}});
  CHECK(pareto_analysis(one)[0][0].pareto_optimal);
  // A pure trade-off frontier keeps every point optimal.
  const Bimatrix trade = from_rows({{1, 2}}, {{2, 1}});
  CHECK(pareto_analysis(trade)[0][0].pareto_optimal);
  CHECK(pareto_analysis(trade)[0][1].pareto_optimal);
}

TEST_CASE("pure nash matches the brute-force oracle") {
  std::mt19937_64 gen(12345);
  std::uniform_int_distribution<int> size(1, 5);
  std::uniform_int_distribution<int> val(-3, 5);
  for (int t = 0; t < 1000; ++t) {
    const int m = size(gen), n = size(gen);
    std::vector<std::vector<int>> a(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(n)));
    auto b = a;
    std::vector<std::vector<double>> ad(static_cast<std::size_t>(m), std::vector<double>(static_cast<std::size_t>(n)));
    auto bd = ad;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        a[i][j] = val(gen);
        b[i][j] = val(gen);
        ad[i][j] = a[i][j];
        bd[i][j] = b[i][j];
      }
    }
    CHECK(pure_nash(from_rows(ad, bd)) == brute_nash(a, b));
  }
}

TEST_CASE("zero-sum values") {
  const ZeroSumSolution sf = zero_sum_value_2x2(spin_flip_table());
  CHECK(sf.value == doctest::Approx(0.0));
  for (double p : sf.row.probs()) CHECK(p == doctest::Approx(0.5));
  for (double q : sf.col.probs()) CHECK(q == doctest::Approx(0.25));

  Eigen::MatrixXd mp(2, 2);
  mp << 1, -1, -1, 1;
  const ZeroSumSolution m = zero_sum_value_2x2(zero_sum({"H", "T"}, {"H", "T"}, mp));
  CHECK(m.value == doctest::Approx(0.0));
  CHECK(m.row[0] == doctest::Approx(0.5));
  CHECK(m.col[0] == doctest::Approx(0.5));

  Eigen::MatrixXd g(2, 2);
  g << 2, 0, 0, 1;
  const ZeroSumSolution s = zero_sum_value_2x2(zero_sum({"a", "b"}, {"c", "d"}, g));
  CHECK(s.value == doctest::Approx(2.0 / 3.0));
  CHECK(s.row[0] == doctest::Approx(1.0 / 3.0));
  CHECK(s.row[1] == doctest::Approx(2.0 / 3.0));
  CHECK(s.max_min == doctest::Approx(s.min_max));
  // Grid oracle: the row player's guaranteed payoff peaks at p = 1/3.
  double best = -1e9, best_p = 0;
  for (int k = 0; k <= 3000; ++k) {
    const double p = k / 3000.0;
    const double guarantee = std::min(2 * p, 1 - p);
    if (guarantee > best) {
      best = guarantee;
      best_p = p;
    }
  }
  CHECK(std::abs(best - s.value) < 1e-3);
  CHECK(std::abs(best_p - s.row[0]) < 1e-3);

  Eigen::MatrixXd saddle(2, 2);
  saddle << 3, 1, 4, 2;
  const ZeroSumSolution sd = zero_sum_value_2x2(zero_sum({"a", "b"}, {"c", "d"}, saddle));
  CHECK(sd.saddle_point);
  CHECK(sd.value == doctest::Approx(2.0));
  CHECK_THROWS_AS(zero_sum_value_2x2(prisoners_dilemma()), DomainError);
}

TEST_CASE("zero-sum payoffs cancel") {
  const Bimatrix g = spin_flip_table();
  for (int i = 0; i <= 10; ++i) {
    const MixedStrategy p({i / 10.0, 1 - i / 10.0});
    const MixedStrategy q({0.1, 0.2, 0.3, 0.4});
    const auto [a, b] = expected_payoff(g, p, q);
    CHECK(std::abs(a + b) < 1e-12);
  }
}

TEST_CASE("repeated game payoff law") {
  const auto d3 = repeated_payoff_distribution(3, 0.5);
  REQUIRE(d3.size() == 4);
  const int pay[4] = {-3, -1, 1, 3};
  const double pr[4] = {0.125, 0.375, 0.375, 0.125};
  for (int k = 0; k < 4; ++k) {
    CHECK(d3[static_cast<std::size_t>(k)].payoff == pay[k]);
    CHECK(d3[static_cast<std::size_t>(k)].probability == doctest::Approx(pr[k]));
  }
  const auto d1 = repeated_payoff_distribution(1, 0.3);
  CHECK(d1[0].payoff == -1);
  CHECK(d1[0].probability == doctest::Approx(0.7));
  CHECK(d1[1].probability == doctest::Approx(0.3));
  for (int n = 1; n <= 30; ++n) {
    double total = 0, mean = 0;
    for (const auto& e : repeated_payoff_distribution(n, 0.5)) {
      total += e.probability;
      mean += e.payoff * e.probability;
    }
    CHECK(std::abs(total - 1.0) < 1e-12);
    CHECK(std::abs(mean) < 1e-12);
    double t2 = 0;
    for (const auto& e : repeated_payoff_distribution(n, 0.37)) t2 += e.probability;
    CHECK(std::abs(t2 - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(repeated_payoff_distribution(0, 0.5), DomainError);
}

TEST_CASE("evolutionary stability") {
  const Bimatrix pd = prisoners_dilemma();
  const EssResult d = ess_test(pd, 1, 0, 0.1);
  CHECK(d.stable);
  CHECK(d.stable_at_eta);
  CHECK(d.invasion_barrier == doctest::Approx(1.0));
  CHECK(is_ess(pd, 1));
  CHECK_FALSE(is_ess(pd, 0));
  CHECK_THROWS_AS(ess_test(battle_of_sexes(3, 2, 1), 0, 1, 0.1), DomainError);

  // Symmetric quantum PD over I, X, H, Z (row player's payoffs).
  Eigen::MatrixXd a(4, 4);
  a << 3, 0, 0.5, 1, 5, 1, 0.5, 0, 3, 3, 2.25, 1.5, 1, 5, 4, 3;
  const Bimatrix q({"I", "X", "H", "Z"}, {"I", "X", "H", "Z"}, a, a.transpose());
  CHECK_FALSE(ess_test(q, 1, 2, 0.01).stable);
  CHECK_FALSE(ess_test(q, 2, 3, 0.01).stable);
  CHECK(is_ess(q, 3));

  // Barrier where (1 - eta) * 1 + eta * (-2) crosses zero: eta0 = 1/3.
  Eigen::MatrixXd s(2, 2);
  s << 2, 0, 1, 2;
  const Bimatrix g({"a", "b"}, {"a", "b"}, s, s.transpose());
  const EssResult b = ess_test(g, 0, 1, 0.1);
  CHECK(b.stable);
  CHECK(std::abs(b.invasion_barrier - 1.0 / 3.0) < 1e-6);
  CHECK_FALSE(ess_test(g, 0, 1, 0.5).stable_at_eta);
}

TEST_CASE("ess at vanishing eta reduces to the best-response condition") {
  std::mt19937_64 gen(4);
  std::uniform_int_distribution<int> val(-3, 5);
  for (int t = 0; t < 300; ++t) {
    Eigen::MatrixXd a(3, 3);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) a(i, j) = val(gen);
    }
    const Bimatrix g({"a", "b", "c"}, {"a", "b", "c"}, a, a.transpose());
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        const bool tiny = ess_test(g, i, j, 1e-9).stable_at_eta;
        const bool strict_better = a(i, i) > a(j, i);
        const bool tie_then_better = a(i, i) == a(j, i) && a(i, j) > a(j, j);
        if (strict_better) CHECK(tiny);
        if (a(i, i) < a(j, i)) CHECK_FALSE(tiny);
        CHECK(ess_test(g, i, j, 0.5).stable == (strict_better || tie_then_better));
      }
    }
  }
}

TEST_CASE("core membership") {
  const CharacteristicGame pt = pseudo_telepathy_game(3);
  CHECK(core_check(pt, {0.2, 0.3, 0.5}));
  CHECK(core_check(pt, {1.0, 0.0, 0.0}));
  CHECK_FALSE(core_check(pt, {0.3, 0.3, 0.3}));
  CHECK(probe_core(pt, 10).found);

  std::vector<double> v(8, 0.0);
  v[0b011] = 2.0;
  v[0b111] = 1.0;
  const CharacteristicGame empty(3, v);
  const CoreProbe probe = probe_core(empty, 30);
  CHECK_FALSE(probe.found);
  CHECK(probe.points_checked == 496);
  CHECK_THROWS_AS(CharacteristicGame(2, {1.0, 0, 0, 1}), DomainError);
  CHECK_THROWS_AS(CharacteristicGame(2, {0.0, 0, 0}), DomainError);
}
