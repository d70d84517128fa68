#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qugame/qstate/state_vector.hpp"
#include "qugame/qstate/unitary.hpp"

namespace qugame::qalgo {

using qstate::StateVector;
using qstate::UnitaryMatrix;

struct GroverRun {
  int n = 0;
  std::uint64_t target = 0;
  int iterations = 0;
  /// sin(theta) = 2^{-n/2}.
  double theta = 0.0;
  /// Register after 0, 1, ..., iterations rotations. Empty when not kept.
  std::vector<StateVector> trajectory;
  /// Target probability after each rotation, always recorded.
  std::vector<double> target_probability;
  double success_probability = 0.0;
};

struct GroverOptions {
  /// Overrides the nearest-integer rotation count.
  std::optional<int> iterations;
  bool keep_trajectory = true;
};

/// Rotation angle asin(1/sqrt(N)).
double grover_theta(std::uint64_t search_size);

/// Nearest integer to pi/(4 theta) - 1/2. Uses the exact angle up to 2^20
/// entries and pi sqrt(N)/4 - 1/2 beyond. Ties round away from zero.
int grover_iterations(std::uint64_t search_size);

struct GroverOperators {
  UnitaryMatrix oracle;
  UnitaryMatrix diffusion;
};

/// Dense oracle 1 - 2|a><a| and diffusion -W (1 - 2|0><0|) W.
/// Throws ResourceError past the matrix cap.
GroverOperators grover_operators(int n, std::uint64_t a);

/// Simulates the search from W|0...0>. The trajectory is bounded by the state
/// cap times the iteration count; ResourceError when it would not fit in
/// 2^24 stored amplitudes.
GroverRun grover_search(int n, std::uint64_t a, const GroverOptions& options = {});

/// Bit oracle |x, y> -> |x, y xor f(x)> on n + 1 qubits.
UnitaryMatrix bit_oracle(int n, const std::function<int(std::uint64_t)>& f);

}  // namespace qugame::qalgo
