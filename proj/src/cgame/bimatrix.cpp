#include "qugame/cgame/bimatrix.hpp"

#include <cmath>
#include <numeric>

#include "qugame/errors.hpp"

namespace qugame::cgame {

Bimatrix::Bimatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels, Eigen::MatrixXd a,
                   Eigen::MatrixXd b)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)), a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() == 0 || a_.cols() == 0) throw DomainError("payoff table is empty");
  if (a_.rows() != b_.rows() || a_.cols() != b_.cols()) throw DomainError("payoff matrices differ in shape");
  if (static_cast<Eigen::Index>(row_labels_.size()) != a_.rows() ||
      static_cast<Eigen::Index>(col_labels_.size()) != a_.cols()) {
    throw DomainError("move labels do not match the payoff shape");
  }
  if (!a_.allFinite() || !b_.allFinite()) throw DomainError("payoffs must be finite");
}

bool Bimatrix::is_zero_sum(double tol) const { return (a_ + b_).cwiseAbs().maxCoeff() <= tol; }

bool Bimatrix::is_symmetric(double tol) const {
  return a_.rows() == a_.cols() && (a_ - b_.transpose()).cwiseAbs().maxCoeff() <= tol;
}

Bimatrix zero_sum(std::vector<std::string> row_labels, std::vector<std::string> col_labels, Eigen::MatrixXd a) {
  Eigen::MatrixXd b = -a;
  return Bimatrix(std::move(row_labels), std::move(col_labels), std::move(a), std::move(b));
}

MixedStrategy::MixedStrategy(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw DomainError("strategy needs at least one move");
  for (double p : probs_) {
    if (!(p >= 0.0)) throw DomainError("strategy probabilities must be nonnegative");
  }
  const double sum = std::accumulate(probs_.begin(), probs_.end(), 0.0);
  if (std::abs(sum - 1.0) > 1e-10) throw DomainError("strategy probabilities must sum to 1");
}

MixedStrategy MixedStrategy::pure(int n, int move) {
  if (move < 0 || move >= n) throw DomainError("move index out of range");
  std::vector<double> p(static_cast<std::size_t>(n), 0.0);
  p[static_cast<std::size_t>(move)] = 1.0;
  return MixedStrategy(std::move(p));
}

MixedStrategy MixedStrategy::uniform(int n) {
  if (n < 1) throw DomainError("strategy needs at least one move");
  return MixedStrategy(std::vector<double>(static_cast<std::size_t>(n), 1.0 / n));
}

Eigen::VectorXd MixedStrategy::vector() const {
  return Eigen::Map<const Eigen::VectorXd>(probs_.data(), static_cast<Eigen::Index>(probs_.size()));
}

std::pair<double, double> expected_payoff(const Bimatrix& g, const MixedStrategy& row, const MixedStrategy& col) {
  if (row.size() != g.rows() || col.size() != g.cols()) throw DomainError("strategy length does not match the game");
  const Eigen::VectorXd p = row.vector();
  const Eigen::VectorXd q = col.vector();
  return {p.dot(g.a() * q), p.dot(g.b() * q)};
}

Bimatrix prisoners_dilemma() {
  Eigen::MatrixXd a(2, 2), b(2, 2);
  a << 3, 0, 5, 1;
  b << 3, 5, 0, 1;
  return Bimatrix({"C", "D"}, {"C", "D"}, a, b);
}

Bimatrix battle_of_sexes(double alpha, double beta, double gamma) {
  if (!(alpha > beta && beta > gamma)) throw DomainError("battle of the sexes needs alpha > beta > gamma");
  Eigen::MatrixXd a(2, 2), b(2, 2);
  a << alpha, gamma, gamma, beta;
  b << beta, gamma, gamma, alpha;
  return Bimatrix({"O", "T"}, {"O", "T"}, a, b);
}

}  // namespace qugame::cgame
