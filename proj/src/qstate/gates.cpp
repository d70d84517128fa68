#include "qugame/qstate/gates.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

#include "qugame/errors.hpp"

namespace qugame::qstate {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

void require_qubits(const StateVector& state, const char* what) {
  for (int d : state.dims()) {
    if (d != 2) throw DomainError(std::string(what) + " requires an all-qubit register");
  }
}

void check_matrix_cap(int n) {
  if (n < 1) throw DomainError("register needs at least one qubit");
  if (n > limits().max_matrix_qubits) {
    throw ResourceError("dense " + std::to_string(n) + "-qubit matrix exceeds the cap of " +
                        std::to_string(limits().max_matrix_qubits) + " qubits");
  }
}

}  // namespace

UnitaryMatrix identity(int dim) {
  if (dim < 1) throw DomainError("identity dimension must be positive");
  return UnitaryMatrix(Eigen::MatrixXcd::Identity(dim, dim));
}

UnitaryMatrix pauli_x() {
  Eigen::MatrixXcd m(2, 2);
  m << 0, 1, 1, 0;
  return UnitaryMatrix(m);
}

UnitaryMatrix pauli_y() {
  const Complex i(0, 1);
  Eigen::MatrixXcd m(2, 2);
  m << 0, -i, i, 0;
  return UnitaryMatrix(m);
}

UnitaryMatrix pauli_z() {
  Eigen::MatrixXcd m(2, 2);
  m << 1, 0, 0, -1;
  return UnitaryMatrix(m);
}

UnitaryMatrix hadamard() {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd m(2, 2);
  m << r, r, r, -r;
  return UnitaryMatrix(m);
}

UnitaryMatrix standard_gate(Gate g, std::optional<double> param) {
  switch (g) {
    case Gate::kIdentity: {
      const double d = param.value_or(2.0);
      if (d < 1 || d != std::floor(d)) throw DomainError("identity dimension must be a positive integer");
      return identity(static_cast<int>(d));
    }
    case Gate::kPauliX:
      return pauli_x();
    case Gate::kPauliY:
      return pauli_y();
    case Gate::kPauliZ:
      return pauli_z();
    case Gate::kHadamard:
      return hadamard();
    case Gate::kCnot: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
      m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
      return UnitaryMatrix(m);
    }
    case Gate::kPhase: {
      const double r = param.value_or(1.0);
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
      m(0, 0) = 1;
      m(1, 1) = std::polar(1.0, std::numbers::pi * r);
      return UnitaryMatrix(m);
    }
    case Gate::kQuarterPhase: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
      m(0, 0) = 1;
      m(1, 1) = Complex(0, 1);
      return UnitaryMatrix(m);
    }
  }
  throw DomainError("unknown gate");
}

Gate gate_from_name(std::string_view name) {
  const std::string n = lower(name);
  if (n == "i" || n == "id" || n == "identity") return Gate::kIdentity;
  if (n == "x" || n == "pauli_x" || n == "sigma_x") return Gate::kPauliX;
  if (n == "y" || n == "pauli_y" || n == "sigma_y") return Gate::kPauliY;
  if (n == "z" || n == "pauli_z" || n == "sigma_z") return Gate::kPauliZ;
  if (n == "h" || n == "hadamard") return Gate::kHadamard;
  if (n == "cnot" || n == "cx") return Gate::kCnot;
  if (n == "phase" || n == "p") return Gate::kPhase;
  if (n == "s" || n == "quarter_phase") return Gate::kQuarterPhase;
  throw DomainError("unknown gate '" + std::string(name) + "'");
}

std::string gate_name(Gate g) {
  switch (g) {
    case Gate::kIdentity:
      return "I";
    case Gate::kPauliX:
      return "X";
    case Gate::kPauliY:
      return "Y";
    case Gate::kPauliZ:
      return "Z";
    case Gate::kHadamard:
      return "H";
    case Gate::kCnot:
      return "CNOT";
    case Gate::kPhase:
      return "PHASE";
    case Gate::kQuarterPhase:
      return "S";
  }
  return "?";
}

UnitaryMatrix walsh(int n) {
  check_matrix_cap(n);
  Eigen::MatrixXcd m = hadamard().matrix();
  for (int k = 1; k < n; ++k) m = kron(m, hadamard().matrix());
  return UnitaryMatrix(m);
}

UnitaryMatrix qft(int n, bool inverse) {
  check_matrix_cap(n);
  const Eigen::Index dim = Eigen::Index{1} << n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  const double sign = inverse ? -1.0 : 1.0;
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    for (Eigen::Index y = 0; y < dim; ++y) {
      const auto k = static_cast<double>((x * y) % dim);
      m(x, y) = std::polar(scale, sign * 2.0 * std::numbers::pi * k / static_cast<double>(dim));
    }
  }
  return UnitaryMatrix(m);
}

StateVector apply_walsh(const StateVector& state) {
  require_qubits(state, "walsh transform");
  Eigen::VectorXcd a = state.amps();
  const auto n = static_cast<std::size_t>(a.size());
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const Complex u = a[static_cast<Eigen::Index>(j)];
        const Complex v = a[static_cast<Eigen::Index>(j + h)];
        a[static_cast<Eigen::Index>(j)] = r * (u + v);
        a[static_cast<Eigen::Index>(j + h)] = r * (u - v);
      }
    }
  }
  return StateVector::normalized(state.dims(), std::move(a));
}

StateVector apply_qft(const StateVector& state, bool inverse) {
  require_qubits(state, "fourier transform");
  // Iterative radix-2 transform computing sum_x a_x e^{+-2 pi i x y / N}.
  Eigen::VectorXcd a = state.amps();
  const auto n = static_cast<std::size_t>(a.size());
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[static_cast<Eigen::Index>(i)], a[static_cast<Eigen::Index>(j)]);
  }
  const double sign = inverse ? -1.0 : 1.0;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    std::vector<Complex> tw(len / 2);
    for (std::size_t k = 0; k < len / 2; ++k) tw[k] = std::polar(1.0, ang * static_cast<double>(k));
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const Complex u = a[static_cast<Eigen::Index>(i + k)];
        const Complex v = a[static_cast<Eigen::Index>(i + k + len / 2)] * tw[k];
        a[static_cast<Eigen::Index>(i + k)] = u + v;
        a[static_cast<Eigen::Index>(i + k + len / 2)] = u - v;
      }
    }
  }
  a /= std::sqrt(static_cast<double>(n));
  return StateVector::normalized(state.dims(), std::move(a));
}

UnitaryMatrix controlled_add(int d) {
  if (d < 2) throw DomainError("qudit dimension must be at least 2");
  std::vector<int> perm(static_cast<std::size_t>(d * d));
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) perm[static_cast<std::size_t>(a * d + b)] = a * d + (a + b) % d;
  }
  return permutation(perm);
}

UnitaryMatrix permutation(const std::vector<int>& perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  if (n == 0) throw DomainError("empty permutation");
  std::vector<bool> hit(perm.size(), false);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index x = 0; x < n; ++x) {
    const int y = perm[static_cast<std::size_t>(x)];
    if (y < 0 || y >= n || hit[static_cast<std::size_t>(y)]) throw DomainError("not a permutation");
    hit[static_cast<std::size_t>(y)] = true;
    m(y, x) = 1;
  }
  return UnitaryMatrix(m);
}

}  // namespace qugame::qstate
