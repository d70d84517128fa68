#include "qugame/qstate/state_vector.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "qugame/errors.hpp"

namespace qugame::qstate {

Limits& limits() {
  static Limits instance;
  return instance;
}

std::size_t total_dim(const Dims& dims) {
  if (dims.empty()) throw DomainError("register needs at least one subsystem");
  std::size_t total = 1;
  for (int d : dims) {
    if (d < 2) throw DomainError("subsystem dimension must be >= 2, got " + std::to_string(d));
    total *= static_cast<std::size_t>(d);
    if (total > limits().max_state_dim()) {
      throw ResourceError("register dimension exceeds cap of " + std::to_string(limits().max_state_dim()));
    }
  }
  return total;
}

std::size_t index_of(const Dims& dims, const std::vector<int>& digits) {
  if (digits.size() != dims.size()) {
    throw DomainError("digit count " + std::to_string(digits.size()) + " does not match " +
                      std::to_string(dims.size()) + " subsystems");
  }
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (digits[k] < 0 || digits[k] >= dims[k]) {
      throw DomainError("digit " + std::to_string(digits[k]) + " out of range for dimension " +
                        std::to_string(dims[k]));
    }
    index = index * static_cast<std::size_t>(dims[k]) + static_cast<std::size_t>(digits[k]);
  }
  return index;
}

std::vector<int> digits_of(const Dims& dims, std::size_t index) {
  std::vector<int> digits(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = static_cast<int>(index % static_cast<std::size_t>(dims[k]));
    index /= static_cast<std::size_t>(dims[k]);
  }
  if (index != 0) throw DomainError("index out of range for register");
  return digits;
}

StateVector::StateVector(Dims dims, Eigen::VectorXcd amps) : dims_(std::move(dims)), amps_(std::move(amps)) {
  const std::size_t n = total_dim(dims_);
  if (static_cast<std::size_t>(amps_.size()) != n) {
    throw DomainError("amplitude count " + std::to_string(amps_.size()) + " does not match register dimension " +
                      std::to_string(n));
  }
  if (std::abs(amps_.norm() - 1.0) > kCheckTolerance) {
    throw DomainError("state is not normalized (norm " + std::to_string(amps_.norm()) + ")");
  }
}

StateVector StateVector::normalized(Dims dims, Eigen::VectorXcd amps) {
  const double n = amps.norm();
  if (!(n > 0.0)) throw DomainError("cannot normalize a zero vector");
  return StateVector(std::move(dims), amps / n);
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(amps_[static_cast<Eigen::Index>(i)]);
  return p;
}

Dims qubits(int n) {
  if (n < 1) throw DomainError("qubit count must be >= 1");
  return Dims(static_cast<std::size_t>(n), 2);
}

StateVector basis_state(const Dims& dims, const std::vector<int>& digits) {
  return basis_state_index(dims, index_of(dims, digits));
}

StateVector basis_state_index(const Dims& dims, std::size_t index) {
  const std::size_t n = total_dim(dims);
  if (index >= n) throw DomainError("basis index out of range");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
  amps[static_cast<Eigen::Index>(index)] = 1.0;
  return StateVector(dims, std::move(amps));
}

StateVector qubit(Complex a, Complex b) {
  Eigen::VectorXcd amps(2);
  amps << a, b;
  return StateVector::normalized({2}, std::move(amps));
}

StateVector uniform_superposition(const Dims& dims) {
  const std::size_t n = total_dim(dims);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Constant(static_cast<Eigen::Index>(n), 1.0 / std::sqrt(double(n)));
  return StateVector(dims, std::move(amps));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  const Eigen::Index nb = b.amps().size();
  Eigen::VectorXcd amps(a.amps().size() * nb);
  for (Eigen::Index i = 0; i < a.amps().size(); ++i) amps.segment(i * nb, nb) = a.amps()[i] * b.amps();
  return StateVector(std::move(dims), std::move(amps));
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.dims() != b.dims()) throw DomainError("inner product of registers with different dims");
  return a.amps().dot(b.amps());  // Eigen's dot conjugates the left operand
}

bool approx_equal(const StateVector& a, const StateVector& b, double tol) {
  if (a.dims() != b.dims()) return false;
  return (a.amps() - b.amps()).cwiseAbs().maxCoeff() <= tol;
}

bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
  if (a.dims() != b.dims()) return false;
  const Complex overlap = inner(b, a);
  if (std::abs(overlap) < 0.5) return false;
  const Complex phase = overlap / std::abs(overlap);
  return (a.amps() - phase * b.amps()).cwiseAbs().maxCoeff() <= tol;
}

std::string ket_label(const Dims& dims, std::size_t index) {
  std::string label = "|";
  for (int d : digits_of(dims, index)) label += std::to_string(d);
  return label + ">";
}

namespace {

std::string format_amplitude(Complex z) {
  std::ostringstream os;
  os << std::setprecision(4);
  const double re = std::abs(z.real()) < 1e-12 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 1e-12 ? 0.0 : z.imag();
  if (im == 0.0) {
    os << re;
  } else if (re == 0.0) {
    os << im << "i";
  } else {
    os << "(" << re << (im < 0 ? "-" : "+") << std::abs(im) << "i)";
  }
  return os.str();
}

}  // namespace

std::string describe(const StateVector& s, int max_terms) {
  std::string out;
  int shown = 0;
  int skipped = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::abs(s[i]) < 1e-12) continue;
    if (shown == max_terms) {
      ++skipped;
      continue;
    }
    if (!out.empty()) out += " + ";
    out += format_amplitude(s[i]) + ket_label(s.dims(), i);
    ++shown;
  }
  if (skipped > 0) out += " + ... (" + std::to_string(skipped) + " more)";
  return out.empty() ? "0" : out;
}

}  // namespace qugame::qstate
