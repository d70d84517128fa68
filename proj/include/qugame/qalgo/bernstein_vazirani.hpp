#pragma once

#include <cstdint>

#include "qugame/qstate/random.hpp"
#include "qugame/qstate/state_vector.hpp"

namespace qugame::qalgo {

struct BvResult {
  std::uint64_t recovered = 0;
  int oracle_calls = 0;
  /// Probability of the measured outcome.
  double probability = 0.0;
};

/// Phase oracle (-1)^{x.a} on the register, counting its applications.
class BvOracle {
 public:
  BvOracle(int n, std::uint64_t secret);
  qstate::StateVector operator()(const qstate::StateVector& state);
  int calls() const { return calls_; }

 private:
  int n_;
  std::uint64_t secret_;
  int calls_ = 0;
};

/// Walsh, one oracle call, Walsh, measure. Throws DomainError when a >= 2^n.
BvResult bernstein_vazirani(int n, std::uint64_t a, qstate::RandomSource& rng);
BvResult bernstein_vazirani(int n, std::uint64_t a);

}  // namespace qugame::qalgo
