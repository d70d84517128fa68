#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qugame::qalgo {

using u64 = std::uint64_t;

u64 mod_mul(u64 a, u64 b, u64 m);
u64 mod_pow(u64 base, u64 exp, u64 m);

/// a^{-1} mod m, or nullopt when gcd(a, m) != 1.
std::optional<u64> mod_inverse(u64 a, u64 m);

bool is_prime(u64 n);

/// (p, k) with n == p^k, p prime and k >= 2; nullopt otherwise.
std::optional<std::pair<u64, int>> prime_power(u64 n);

/// Least r >= 1 with m^r == 1 mod N, by direct iteration. Throws DomainError
/// when gcd(m, N) != 1.
u64 multiplicative_order(u64 m, u64 n);

/// Euler phi by trial division.
u64 euler_phi(u64 n);

struct Fraction {
  u64 num = 0;
  u64 den = 1;
  bool operator==(const Fraction&) const = default;
};

/// Successive convergents of w / q.
std::vector<Fraction> convergents(u64 w, u64 q);

/// Last convergent of w / q whose denominator is below bound. w == 0 gives 0/1.
Fraction continued_fraction_best(u64 w, u64 q, u64 bound);

/// Order recovery from an observed w: walks the convergents of w / q with
/// denominator below n, largest first, and tries each denominator times
/// k = 1..ceil(log2 n) while it stays below n. Returns k d' / k r' for the first
/// exponent with m^{k r'} == 1 mod n, or nullopt.
std::optional<Fraction> recover_order(u64 w, u64 q, u64 n, u64 m);

enum class OrderStatus { kOk, kBadOrder, kOddOrder, kTrivial };

std::string to_string(OrderStatus s);

struct FactorAttempt {
  OrderStatus status = OrderStatus::kTrivial;
  /// Ascending nontrivial factors p, N/p when status is kOk.
  std::vector<u64> factors;
  /// Exponent h whose m^h gave the split.
  u64 exponent = 0;
  /// m^h mod N at that exponent.
  u64 residue = 0;
  /// Human-readable trail of the halving steps.
  std::vector<std::string> steps;
};

/// Splits N from an order candidate r of m: checks m^r == 1, then halves the
/// exponent while m^h stays 1 and tries gcd(N, m^h -+ 1).
FactorAttempt factor_from_order(u64 n, u64 m, u64 r);

}  // namespace qugame::qalgo
