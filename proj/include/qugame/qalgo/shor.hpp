#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qugame/qalgo/number_theory.hpp"
#include "qugame/qstate/random.hpp"

namespace qugame::qalgo {

struct PeriodSample {
  u64 modulus = 0;
  u64 base = 0;
  /// Left register width 2n with 2^{2n-2} < N^2 < 2^{2n}.
  int width = 0;
  u64 q = 0;
  /// Collapsed right-register value m^x mod N.
  u64 observed_residue = 0;
  /// Spacing of the surviving left-register comb (the true order).
  u64 comb_spacing = 0;
  u64 w = 0;
  double probability = 0.0;
  /// Best convergent of w / q with denominator below N.
  Fraction candidate;
  /// Convergent multiple that satisfies m^r == 1, when one exists.
  std::optional<Fraction> recovered;
};

/// Even left-register width for modulus N. Throws ResourceError when it
/// exceeds the state cap and DomainError for N < 3.
int register_width(u64 n);

/// Period finding for one (N, m). The right register is a table of m^x mod N;
/// each observed residue selects a comb of left-register amplitudes whose
/// Fourier distribution is computed once and cached.
class PeriodFinder {
 public:
  PeriodFinder(u64 n, u64 m);

  PeriodSample sample(qstate::RandomSource& rng);

  /// |QFT of the comb for residue z|^2 over w.
  const std::vector<double>& distribution_for(u64 residue);

  int width() const { return width_; }
  u64 q() const { return q_; }
  u64 order() const { return order_; }

 private:
  u64 n_;
  u64 m_;
  int width_;
  u64 q_;
  u64 order_;
  std::vector<u64> table_;
  std::map<u64, std::vector<double>> cache_;
};

PeriodSample order_find(u64 n, u64 m, qstate::RandomSource& rng);

/// Marginal distribution of w. With collapse_first the right register is
/// measured before the transform; otherwise the transform acts on the joint
/// state and the right register is traced out afterwards.
std::vector<double> order_find_distribution(u64 n, u64 m, bool collapse_first);

struct ShorRound {
  int round = 0;
  u64 base = 0;
  /// "gcd" for the classical shortcut, "order" for a period-finding sample.
  std::string kind;
  std::optional<PeriodSample> sample;
  std::optional<FactorAttempt> attempt;
  std::vector<u64> factors;
};

struct ShorResult {
  u64 modulus = 0;
  bool success = false;
  std::vector<u64> factors;
  int rounds = 0;
  /// Set when N was split before any quantum step ("even" or "prime power").
  std::string classical_exit;
  std::vector<ShorRound> transcript;
};

/// Factors an odd composite N that is not a prime power. Even N and prime
/// powers take classical exits; primes throw DomainError. base fixes the first
/// base tried.
ShorResult shor_factor(u64 n, qstate::RandomSource& rng, int max_rounds = 25,
                       std::optional<u64> base = std::nullopt);

struct RsaResult {
  u64 p = 0;
  u64 q = 0;
  u64 phi = 0;
  u64 d = 0;
  u64 plaintext = 0;
  ShorResult shor;
};

/// Recovers the private exponent through factoring and decrypts. Throws
/// DomainError when factoring fails or gcd(e, phi) != 1.
RsaResult rsa_demo(u64 n, u64 e, u64 ciphertext, qstate::RandomSource& rng, int max_rounds = 25,
                   std::optional<u64> base = std::nullopt);

}  // namespace qugame::qalgo
