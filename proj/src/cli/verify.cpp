#include "qugame/cli/verify.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "qugame/cgame.hpp"
#include "qugame/density.hpp"
#include "qugame/errors.hpp"
#include "qugame/qalgo.hpp"
#include "qugame/qgames.hpp"
#include "qugame/qstate.hpp"

namespace qugame::cli {

namespace {

using qstate::Complex;
using qstate::StateVector;

// Classical prisoner's dilemma, rows and columns {C, D}.
const double kPdA[2][2] = {{3, 0}, {5, 1}};
const double kPdB[2][2] = {{3, 5}, {0, 1}};
// Quantum prisoner's dilemma over {I, X, H, Z}; the 3x3 corner is the {I, X, H} table.
const double kQpdA[4][4] = {{3, 0, 0.5, 1}, {5, 1, 0.5, 0}, {3, 3, 2.25, 1.5}, {1, 5, 4, 3}};
const double kQpdB[4][4] = {{3, 5, 3, 1}, {0, 1, 3, 5}, {0.5, 0.5, 2.25, 4}, {1, 0, 1.5, 3}};

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::string num(double v) {
  std::ostringstream s;
  s.precision(10);
  s << v;
  return s.str();
}

/// Compares a table with the top-left rows x cols block of published
/// constants; the detail names the first mismatch.
template <int R, int C>
std::pair<bool, std::string> table_matches(const cgame::Bimatrix& g, const double (&a)[R][C], const double (&b)[R][C],
                                           int rows = R, int cols = C) {
  if (g.rows() != rows || g.cols() != cols) return {false, "table has the wrong shape"};
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (!near(g.a()(r, c), a[r][c], 1e-12) || !near(g.b()(r, c), b[r][c], 1e-12))
        return {false, "cell (" + g.row_labels()[static_cast<std::size_t>(r)] + ", " +
                           g.col_labels()[static_cast<std::size_t>(c)] + ") = (" + num(g.a()(r, c)) + ", " +
                           num(g.b()(r, c)) + "), expected (" + num(a[r][c]) + ", " + num(b[r][c]) + ")"};
  return {true, std::to_string(rows) + "x" + std::to_string(cols) + " cells match"};
}

class Suite {
 public:
  void add(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    Check c{name, false, ""};
    try {
      auto [ok, detail] = body();
      c.passed = ok;
      c.detail = detail;
    } catch (const std::exception& e) {
      c.detail = std::string("threw: ") + e.what();
    }
    checks_.push_back(std::move(c));
  }
  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::vector<Check> checks_;
};

std::pair<bool, std::string> expect(bool ok, const std::string& detail) { return {ok, detail}; }

}  // namespace

std::vector<Check> verify_all(const VerifyOptions& options) {
  const cgame::Bimatrix pd = options.pd_payoffs.value_or(cgame::prisoners_dilemma());
  Suite s;

  s.add("grover.iterations_n3", [] {
    const int k = qalgo::grover_iterations(8);
    return expect(k == 2, "k = " + std::to_string(k));
  });
  s.add("grover.success_n3", [] {
    const double p = qalgo::grover_search(3, 5).success_probability;
    return expect(near(p, 0.9453, 5e-5), "success = " + num(p));
  });
  s.add("grover.amplitudes_n3", [] {
    const auto run = qalgo::grover_search(3, 5);
    double worst = 0.0;
    for (std::size_t x = 0; x < 8; ++x) {
      const double one = (x == 5 ? 5.0 : 1.0) / (4 * std::sqrt(2.0));
      const double two = (x == 5 ? 11.0 : -1.0) / (8 * std::sqrt(2.0));
      worst = std::max(worst, std::abs(run.trajectory[1][x] - Complex(one)));
      worst = std::max(worst, std::abs(run.trajectory[2][x] - Complex(two)));
    }
    return expect(worst < 1e-9, "max deviation " + num(worst));
  });
  s.add("grover.iterations_2^30", [] {
    const int k = qalgo::grover_iterations(std::uint64_t{1} << 30);
    return expect(k == 25735, "k = " + std::to_string(k));
  });
  s.add("bv.one_query", [] {
    qstate::RandomSource rng(3);
    for (std::uint64_t a = 0; a < 32; ++a) {
      const auto r = qalgo::bernstein_vazirani(5, a, rng);
      if (r.recovered != a || r.oracle_calls != 1) return expect(false, "secret " + std::to_string(a) + " missed");
    }
    return expect(true, "all 32 five-bit secrets in one query");
  });
  s.add("shor.order_39_mod_77", [] {
    const qalgo::PeriodFinder f(77, 39);
    return expect(f.order() == 30, "order = " + std::to_string(f.order()));
  });
  s.add("rsa.77_11_67", [] {
    qstate::RandomSource rng(1);
    const auto r = qalgo::rsa_demo(77, 11, 67, rng);
    const bool ok = r.p == 7 && r.q == 11 && r.phi == 60 && r.d == 11 && r.plaintext == 23 && r.shor.rounds <= 25;
    return expect(ok, "p=" + std::to_string(r.p) + " q=" + std::to_string(r.q) + " phi=" + std::to_string(r.phi) +
                          " d=" + std::to_string(r.d) + " plaintext=" + std::to_string(r.plaintext));
  });

  s.add("pd.classical_table", [&] { return table_matches(pd, kPdA, kPdB); });
  s.add("pd.classical_nash", [&] {
    const auto n = cgame::pure_nash(pd);
    return expect(n.size() == 1 && n[0] == cgame::Cell{1, 1}, std::to_string(n.size()) + " pure equilibria");
  });
  s.add("pd.joint_dominance", [&] {
    const auto f = cgame::pareto_analysis(pd)[1][1];
    return expect(f.jointly_dominated && f.dominated_by == cgame::Cell{0, 0}, "(D, D) dominated by (C, C)");
  });
  s.add("pd.quantum_table_3x3", [&] {
    return table_matches(qgames::ewl_table(qgames::move_set({"I", "X", "H"}), pd), kQpdA, kQpdB, 3, 3);
  });
  s.add("pd.quantum_table_4x4", [&] {
    return table_matches(qgames::ewl_table(qgames::move_set({"I", "X", "H", "Z"}), pd), kQpdA, kQpdB);
  });
  s.add("pd.quantum_nash", [&] {
    const auto t = qgames::ewl_table(qgames::move_set({"I", "X", "H", "Z"}), pd);
    const auto n = cgame::pure_nash(t);
    const bool ok = n.size() == 1 && n[0] == cgame::Cell{3, 3} && near(t.a()(3, 3), 3, 1e-12) &&
                    near(t.b()(3, 3), 3, 1e-12) && cgame::pareto_analysis(t)[3][3].pareto_optimal;
    return expect(ok, std::to_string(n.size()) + " pure equilibria");
  });
  s.add("pd.ewl_plays", [&] {
    const auto i = qstate::identity(2);
    const auto h = qstate::hadamard();
    const auto ih = qgames::ewl_play(i, h, pd);
    const auto hh = qgames::ewl_play(h, h, pd);
    const bool ok = near(ih.payoff_a, 0.5, 1e-12) && near(ih.payoff_b, 3, 1e-12) && near(hh.payoff_a, 2.25, 1e-12) &&
                    near(hh.payoff_b, 2.25, 1e-12);
    return expect(ok, "(I, H) -> (" + num(ih.payoff_a) + ", " + num(ih.payoff_b) + "), (H, H) -> (" +
                          num(hh.payoff_a) + ", " + num(hh.payoff_b) + ")");
  });
  s.add("pd.ess", [&] {
    const auto t = qgames::ewl_table(qgames::move_set({"I", "X", "H", "Z"}), pd);
    const bool ok = !cgame::ess_test(t, 1, 2, 0.01).stable && !cgame::ess_test(t, 2, 3, 0.01).stable && cgame::is_ess(t, 3);
    return expect(ok, "X invaded by H, H invaded by Z, Z stable");
  });

  s.add("bos.classical_mixed", [] {
    const auto m = cgame::mixed_nash_2x2(cgame::battle_of_sexes(3, 2, 1));
    const bool ok = m.interior && near(m.p, 2.0 / 3, 1e-12) && near(m.q, 1.0 / 3, 1e-12) &&
                    near(m.payoff_a, 5.0 / 3, 1e-12) && near(m.payoff_b, 5.0 / 3, 1e-12);
    return expect(ok, "p=" + num(m.p) + " q=" + num(m.q) + " payoff=" + num(m.payoff_a));
  });
  s.add("bos.quantum_nash", [] {
    const auto t = qgames::ewl_table(qgames::move_set({"I", "X", "H", "Z"}), cgame::battle_of_sexes(3, 2, 1));
    const auto n = cgame::pure_nash(t);
    const bool ok = n.size() == 1 && n[0] == cgame::Cell{1, 1} && near(t.a()(1, 1), 2, 1e-12) && near(t.b()(1, 1), 3, 1e-12);
    return expect(ok, std::to_string(n.size()) + " pure equilibria");
  });
  s.add("bos.quantum_mixed", [] {
    const auto m = qgames::quantum_bos_mixed(3, 2, 1);
    const bool ok = m.interior && near(m.p, 0.5, 1e-12) && near(m.q, 0.5, 1e-12) && near(m.payoff_a, 2.5, 1e-12) &&
                    near(m.payoff_b, 2.5, 1e-12);
    return expect(ok, "p=" + num(m.p) + " q=" + num(m.q) + " payoff=" + num(m.payoff_a));
  });

  s.add("spinflip.table", [] {
    const auto t = qgames::spin_flip_table(qgames::spin_up());
    const double want[2][4] = {{-1, 1, 1, -1}, {1, -1, -1, 1}};
    const double neg[2][4] = {{1, -1, -1, 1}, {-1, 1, 1, -1}};
    return table_matches(t, want, neg);
  });
  s.add("spinflip.value", [] {
    const auto v = cgame::zero_sum_value_2x2(qgames::spin_flip_table(qgames::spin_up()));
    return expect(near(v.value, 0, 1e-12), "value = " + num(v.value));
  });
  s.add("spinflip.quantum_bob", [] {
    const auto h = qstate::hadamard();
    const auto e = qgames::spin_flip_expected(cgame::MixedStrategy::uniform(2), h, h, qgames::spin_up());
    return expect(near(e, -1, 1e-12), "Alice expects " + num(e));
  });

  s.add("newcomb.mixture", [] {
    for (double w : {0.0, 0.25, 0.5, 1.0}) {
      const auto r0 = qgames::newcomb_play(0, w);
      const auto r1 = qgames::newcomb_play(1, w);
      if (!near(r0.payoffs.at("alice"), 1e6, 1e-6) || !near(r0.probabilities.at("|00>"), 1, 1e-12) ||
          !near(r1.probabilities.at("|11>"), 1, 1e-12))
        return expect(false, "w = " + num(w));
    }
    return expect(true, "sb=0 pays 1000000 and sb=1 ends in |11> for all w");
  });
  s.add("newcomb.coherent", [] {
    for (double w : {0.0, 0.25, 0.5, 1.0}) {
      const auto r = qgames::newcomb_play(1, w, true);
      if (!near(r.details["raw_amplitudes"][3][0].get<double>(), 1 - 2 * w, 1e-12)) return expect(false, "w = " + num(w));
    }
    return expect(true, "|11> coefficient is 1 - 2w");
  });

  s.add("telepathy.always_wins", [] {
    qstate::RandomSource rng(5);
    for (int n = 2; n <= 6; ++n) {
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> x;
        int sum = 0;
        for (int i = 0; i < n; ++i) {
          x.push_back(static_cast<int>((mask >> i) & 1u));
          sum += x.back();
        }
        if (sum % 2) continue;
        if (!qgames::pseudo_telepathy_round(x, rng).win) return expect(false, "lost at N = " + std::to_string(n));
      }
    }
    return expect(true, "every admissible input won for N = 2..6");
  });
  s.add("telepathy.core", [] {
    const auto g = cgame::pseudo_telepathy_game(3);
    const bool ok = cgame::core_check(g, {1, 0, 0}) && cgame::core_check(g, {0.2, 0.3, 0.5}) &&
                    !cgame::core_check(g, {0.5, 0.4, 0.0});
    return expect(ok, "imputations summing to 1 are in the core");
  });

  const StateVector secret = qstate::qubit(0.6, Complex(0, 0.8));
  s.add("teleport.branches", [&] {
    qstate::RandomSource rng(6);
    for (int k = 0; k < 4; ++k) {
      const auto r = qgames::teleport(secret, rng, k);
      if (!near(r.overlap, 1, 1e-9)) return expect(false, "Bell outcome " + std::to_string(k) + " overlap " + num(r.overlap));
    }
    return expect(true, "all four Bell outcomes recover the state");
  });
  s.add("secret.qubit_branches", [&] {
    qstate::RandomSource rng(7);
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 2; ++j) {
        const auto r = qgames::secret_share_qubit(secret, rng, k, j);
        if (!near(r.overlap, 1, 1e-9))
          return expect(false, "branch (" + std::to_string(k) + ", " + std::to_string(j) + ") overlap " + num(r.overlap));
      }
    return expect(true, "all eight branches recover the secret");
  });
  s.add("secret.qutrit_pairs", [] {
    const auto q = StateVector::normalized({3}, Eigen::Vector3cd(0.6, Complex(0, 0.3), 0.5));
    for (auto pair : {qgames::SharePair::kAliceBob, qgames::SharePair::kBobGerald, qgames::SharePair::kAliceGerald}) {
      const auto r = qgames::secret_share_qutrit(q, pair);
      if (!near(r.overlap, 1, 1e-9)) return expect(false, qgames::to_string(pair) + " overlap " + num(r.overlap));
      for (const auto& [party, ev] : r.report.details["share_eigenvalues"].items())
        for (const auto& e : ev)
          if (!near(e.get<double>(), 1.0 / 3, 1e-9)) return expect(false, party + " share is not maximally mixed");
    }
    return expect(true, "all pairs recover; single shares maximally mixed");
  });

  s.add("density.ensemble", [] {
    const auto rho = density::rho_from_ensemble({qstate::qubit(0.8, 0.6), qstate::qubit(0.6, Complex(0, -0.8))}, {0.75, 0.25});
    const double p0 = density::measure_prob(rho, qstate::qubit(0.6, 0.8));
    const double p1 = density::measure_prob(rho, qstate::qubit(0.8, -0.6));
    const bool ok = std::abs(rho(0, 0) - Complex(0.57)) < 1e-10 && std::abs(rho(0, 1) - Complex(0.36, 0.12)) < 1e-10 &&
                    std::abs(rho(1, 1) - Complex(0.43)) < 1e-10 && near(p0, 0.826, 5e-4) && near(p1, 0.174, 5e-4);
    return expect(ok, "rho01 = " + num(rho(0, 1).real()) + " + " + num(rho(0, 1).imag()) + "i, probabilities " + num(p0) +
                          " / " + num(p1));
  });
  s.add("clone.uqcm", [&] {
    const auto r = density::uqcm_clone(secret);
    return expect(near(r.fidelity, 5.0 / 6, 1e-9) && near(r.eta, 2.0 / 3, 1e-9),
                  "fidelity " + num(r.fidelity) + ", eta " + num(r.eta));
  });

  return s.take();
}

}  // namespace qugame::cli
