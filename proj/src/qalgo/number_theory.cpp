#include "qugame/qalgo/number_theory.hpp"

#include <cmath>
#include <numeric>

#include "qugame/errors.hpp"

namespace qugame::qalgo {

u64 mod_mul(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 mod_pow(u64 base, u64 exp, u64 m) {
  if (m == 0) throw DomainError("modulus must be positive");
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mod_mul(result, base, m);
    base = mod_mul(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::optional<u64> mod_inverse(u64 a, u64 m) {
  if (m == 0) return std::nullopt;
  __int128 old_r = static_cast<__int128>(a % m), r = static_cast<__int128>(m);
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    const __int128 tr = old_r - q * r;
    old_r = r;
    r = tr;
    const __int128 ts = old_s - q * s;
    old_s = s;
    s = ts;
  }
  if (old_r != 1) return std::nullopt;
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<u64>(inv);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are deterministic for every 64-bit n.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mod_mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::optional<std::pair<u64, int>> prime_power(u64 n) {
  if (n < 4) return std::nullopt;
  for (int k = 63; k >= 2; --k) {
    auto root = static_cast<u64>(std::llround(std::pow(static_cast<double>(n), 1.0 / k)));
    for (u64 c = root > 1 ? root - 1 : 1; c <= root + 1; ++c) {
      if (c < 2) continue;
      unsigned __int128 p = 1;
      int e = 0;
      while (e < k && p <= n) {
        p *= c;
        ++e;
      }
      if (e == k && p == n && is_prime(c)) return std::make_pair(c, k);
    }
  }
  return std::nullopt;
}

u64 multiplicative_order(u64 m, u64 n) {
  if (n < 2 || std::gcd(m, n) != 1) throw DomainError("base must be coprime to the modulus");
  u64 r = 1;
  u64 x = m % n;
  while (x != 1) {
    x = mod_mul(x, m, n);
    ++r;
  }
  return r;
}

u64 euler_phi(u64 n) {
  if (n == 0) throw DomainError("phi(0) is undefined");
  u64 result = n;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Fraction> convergents(u64 w, u64 q) {
  if (q == 0) throw DomainError("denominator must be positive");
  std::vector<Fraction> out;
  // h_k = a_k h_{k-1} + h_{k-2}, k_k = a_k k_{k-1} + k_{k-2}
  u64 h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  u64 num = w, den = q;
  while (den != 0) {
    const u64 a = num / den;
    const u64 h = a * h_prev + h_prev2;
    const u64 k = a * k_prev + k_prev2;
    out.push_back({h, k});
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    const u64 rem = num % den;
    num = den;
    den = rem;
  }
  return out;
}

Fraction continued_fraction_best(u64 w, u64 q, u64 bound) {
  if (w >= q) throw DomainError("w must be below q");
  if (bound < 1) throw DomainError("denominator bound must be positive");
  if (w == 0) return {0, 1};
  Fraction best{0, 1};
  for (const Fraction& f : convergents(w, q)) {
    if (f.den >= bound) break;
    best = f;
  }
  return best;
}

std::optional<Fraction> recover_order(u64 w, u64 q, u64 n, u64 m) {
  if (n < 2) throw DomainError("modulus must be at least 2");
  std::vector<Fraction> cands;
  for (const Fraction& f : convergents(w % q, q)) {
    if (f.den >= n) break;
    cands.push_back(f);
  }
  const u64 max_mult = static_cast<u64>(std::ceil(std::log2(static_cast<double>(n))));
  for (auto it = cands.rbegin(); it != cands.rend(); ++it) {
    for (u64 k = 1; k <= max_mult && k * it->den < n; ++k) {
      if (mod_pow(m, k * it->den, n) == 1) return Fraction{k * it->num, k * it->den};
    }
  }
  return std::nullopt;
}

std::string to_string(OrderStatus s) {
  switch (s) {
    case OrderStatus::kOk:
      return "ok";
    case OrderStatus::kBadOrder:
      return "bad_order";
    case OrderStatus::kOddOrder:
      return "odd_order";
    case OrderStatus::kTrivial:
      return "trivial";
  }
  return "?";
}

FactorAttempt factor_from_order(u64 n, u64 m, u64 r) {
  if (r < 1) throw DomainError("order candidate must be positive");
  if (n < 3) throw DomainError("modulus must be at least 3");
  FactorAttempt out;
  const u64 full = mod_pow(m, r, n);
  out.steps.push_back(std::to_string(m) + "^" + std::to_string(r) + " mod " + std::to_string(n) + " = " +
                      std::to_string(full));
  if (full != 1) {
    out.status = OrderStatus::kBadOrder;
    return out;
  }
  if (r % 2 != 0) {
    out.status = OrderStatus::kOddOrder;
    return out;
  }
  u64 h = r;
  while (h % 2 == 0) {
    h /= 2;
    const u64 y = mod_pow(m, h, n);
    out.steps.push_back(std::to_string(m) + "^" + std::to_string(h) + " mod " + std::to_string(n) + " = " +
                        std::to_string(y));
    if (y == 1) continue;
    out.exponent = h;
    out.residue = y;
    const u64 g1 = std::gcd(n, y - 1);
    const u64 g2 = std::gcd(n, y + 1);
    out.steps.push_back("gcd(" + std::to_string(n) + ", " + std::to_string(y - 1) + ") = " + std::to_string(g1) +
                        ", gcd(" + std::to_string(n) + ", " + std::to_string(y + 1) + ") = " + std::to_string(g2));
    for (u64 g : {g1, g2}) {
      if (g > 1 && g < n) {
        out.status = OrderStatus::kOk;
        out.factors = {std::min(g, n / g), std::max(g, n / g)};
        return out;
      }
    }
    out.status = OrderStatus::kTrivial;
    return out;
  }
  out.status = OrderStatus::kTrivial;
  return out;
}

}  // namespace qugame::qalgo
