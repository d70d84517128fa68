#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qugame::cgame {

inline constexpr double kPayoffTolerance = 1e-9;

/// Two-player payoff table. a(i, j) is the row player's payoff and b(i, j)
/// the column player's when row plays i and column plays j.
class Bimatrix {
 public:
  /// Throws DomainError when shapes and label counts disagree.
  Bimatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels, Eigen::MatrixXd a,
           Eigen::MatrixXd b);

  int rows() const { return static_cast<int>(a_.rows()); }
  int cols() const { return static_cast<int>(a_.cols()); }
  const Eigen::MatrixXd& a() const { return a_; }
  const Eigen::MatrixXd& b() const { return b_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  /// b == -a.
  bool is_zero_sum(double tol = kPayoffTolerance) const;
  /// Square with a == b^T.
  bool is_symmetric(double tol = kPayoffTolerance) const;

 private:
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  Eigen::MatrixXd a_;
  Eigen::MatrixXd b_;
};

/// Zero-sum table from the row player's payoffs.
Bimatrix zero_sum(std::vector<std::string> row_labels, std::vector<std::string> col_labels, Eigen::MatrixXd a);

/// Probability vector over a player's moves.
class MixedStrategy {
 public:
  /// Throws DomainError on negative entries or a sum away from 1 by more than 1e-10.
  explicit MixedStrategy(std::vector<double> probs);

  static MixedStrategy pure(int n, int move);
  static MixedStrategy uniform(int n);

  const std::vector<double>& probs() const { return probs_; }
  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int i) const { return probs_[static_cast<std::size_t>(i)]; }
  Eigen::VectorXd vector() const;

 private:
  std::vector<double> probs_;
};

/// (sum a_ij p_i q_j, sum b_ij p_i q_j).
std::pair<double, double> expected_payoff(const Bimatrix& g, const MixedStrategy& row, const MixedStrategy& col);

/// Classical prisoner's dilemma, moves C and D.
Bimatrix prisoners_dilemma();

/// Classical battle of the sexes, moves O and T. Requires alpha > beta > gamma.
Bimatrix battle_of_sexes(double alpha, double beta, double gamma);

}  // namespace qugame::cgame
