#include "qugame/qalgo/shor.hpp"

#include <cmath>
#include <numeric>

#include "qugame/errors.hpp"
#include "qugame/qstate/gates.hpp"
#include "qugame/qstate/unitary.hpp"

namespace qugame::qalgo {

namespace {

int bits_for(u64 n) {
  int b = 0;
  while ((u64{1} << b) < n) ++b;
  return b;
}

std::vector<double> probabilities_of(const Eigen::VectorXcd& amps) {
  std::vector<double> p(static_cast<std::size_t>(amps.size()));
  for (Eigen::Index i = 0; i < amps.size(); ++i) p[static_cast<std::size_t>(i)] = std::norm(amps[i]);
  return p;
}

}  // namespace

int register_width(u64 n) {
  if (n < 3) throw DomainError("modulus must be at least 3");
  const unsigned __int128 n2 = static_cast<unsigned __int128>(n) * n;
  int width = 2;
  while ((static_cast<unsigned __int128>(1) << width) <= n2) width += 2;
  if (width > qstate::limits().max_state_qubits) {
    throw ResourceError("modulus " + std::to_string(n) + " needs a " + std::to_string(width) +
                        "-qubit register, above the cap of " + std::to_string(qstate::limits().max_state_qubits));
  }
  return width;
}

PeriodFinder::PeriodFinder(u64 n, u64 m) : n_(n), m_(m), width_(register_width(n)), q_(u64{1} << width_) {
  if (m < 2 || m >= n) throw DomainError("base must lie in [2, N-1]");
  if (std::gcd(m, n) != 1) throw DomainError("base shares a factor with the modulus; take the classical exit");
  order_ = multiplicative_order(m, n);
  table_.resize(static_cast<std::size_t>(q_));
  u64 v = 1;
  for (u64 x = 0; x < q_; ++x) {
    table_[static_cast<std::size_t>(x)] = v;
    v = mod_mul(v, m, n);
  }
}

const std::vector<double>& PeriodFinder::distribution_for(u64 residue) {
  auto it = cache_.find(residue);
  if (it != cache_.end()) return it->second;
  Eigen::VectorXcd comb = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(q_));
  std::size_t count = 0;
  for (std::size_t x = 0; x < table_.size(); ++x) {
    if (table_[x] == residue) {
      comb[static_cast<Eigen::Index>(x)] = 1.0;
      ++count;
    }
  }
  if (count == 0) throw DomainError("residue " + std::to_string(residue) + " never occurs");
  const qstate::StateVector state = qstate::StateVector::normalized(qstate::qubits(width_), std::move(comb));
  return cache_.emplace(residue, qstate::apply_qft(state).probabilities()).first->second;
}

PeriodSample PeriodFinder::sample(qstate::RandomSource& rng) {
  PeriodSample s;
  s.modulus = n_;
  s.base = m_;
  s.width = width_;
  s.q = q_;
  s.comb_spacing = order_;
  // Observing the right register of sum_x |x>|m^x mod N> yields m^x for a uniform x.
  s.observed_residue = table_[static_cast<std::size_t>(rng.below(q_))];
  const std::vector<double>& dist = distribution_for(s.observed_residue);
  s.w = rng.sample(dist);
  s.probability = dist[static_cast<std::size_t>(s.w)];
  s.candidate = continued_fraction_best(s.w, q_, n_);
  s.recovered = recover_order(s.w, q_, n_, m_);
  return s;
}

PeriodSample order_find(u64 n, u64 m, qstate::RandomSource& rng) {
  PeriodFinder finder(n, m);
  return finder.sample(rng);
}

std::vector<double> order_find_distribution(u64 n, u64 m, bool collapse_first) {
  PeriodFinder finder(n, m);
  const u64 q = finder.q();
  std::vector<double> out(static_cast<std::size_t>(q), 0.0);
  std::vector<u64> table(static_cast<std::size_t>(q));
  for (u64 x = 0; x < q; ++x) table[static_cast<std::size_t>(x)] = mod_pow(m, x, n);

  if (collapse_first) {
    std::map<u64, u64> counts;
    for (u64 z : table) ++counts[z];
    for (const auto& [z, c] : counts) {
      const double pz = static_cast<double>(c) / static_cast<double>(q);
      const std::vector<double>& dist = finder.distribution_for(z);
      for (std::size_t w = 0; w < out.size(); ++w) out[w] += pz * dist[w];
    }
    return out;
  }

  // Joint register |x>|m^x mod N>, transform on the left block, then trace the right block out.
  const int left = finder.width();
  const int right = bits_for(n);
  if (left > qstate::limits().max_matrix_qubits) {
    throw ResourceError("deferred ordering needs a dense transform above the matrix cap");
  }
  const qstate::Dims dims = qstate::qubits(left + right);
  const std::size_t rdim = std::size_t{1} << right;
  Eigen::VectorXcd joint = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(qstate::total_dim(dims)));
  for (u64 x = 0; x < q; ++x) {
    joint[static_cast<Eigen::Index>(x * rdim + table[static_cast<std::size_t>(x)])] = 1.0;
  }
  std::vector<int> targets(static_cast<std::size_t>(left));
  std::iota(targets.begin(), targets.end(), 0);
  const qstate::StateVector start = qstate::StateVector::normalized(dims, std::move(joint));
  const qstate::StateVector after = qstate::apply(start, qstate::qft(left), targets);
  const std::vector<double> p = probabilities_of(after.amps());
  for (std::size_t i = 0; i < p.size(); ++i) out[i / rdim] += p[i];
  return out;
}

ShorResult shor_factor(u64 n, qstate::RandomSource& rng, int max_rounds, std::optional<u64> base) {
  if (n < 4) throw DomainError("modulus must be a composite of at least 4");
  if (is_prime(n)) throw DomainError(std::to_string(n) + " is prime");
  ShorResult result;
  result.modulus = n;
  if (n % 2 == 0) {
    result.success = true;
    result.classical_exit = "even";
    result.factors = {2, n / 2};
    return result;
  }
  if (auto pp = prime_power(n)) {
    result.success = true;
    result.classical_exit = "prime power";
    result.factors = {pp->first, n / pp->first};
    return result;
  }
  register_width(n);

  const double lg = std::log2(static_cast<double>(n));
  const int retries = std::max(1, static_cast<int>(std::ceil(std::log2(lg))));
  bool first = true;
  while (result.rounds < max_rounds) {
    u64 m = first && base ? *base : rng.between(2, n - 2);
    first = false;
    if (m < 2 || m > n - 2) throw DomainError("base must lie in [2, N-2]");
    const u64 g = std::gcd(m, n);
    if (g > 1) {
      ShorRound round{++result.rounds, m, "gcd", std::nullopt, std::nullopt, {std::min(g, n / g), std::max(g, n / g)}};
      result.transcript.push_back(round);
      result.success = true;
      result.factors = round.factors;
      return result;
    }
    PeriodFinder finder(n, m);
    for (int t = 0; t < retries && result.rounds < max_rounds; ++t) {
      const PeriodSample s = finder.sample(rng);
      const u64 r = s.recovered ? s.recovered->den : s.candidate.den;
      const FactorAttempt attempt = factor_from_order(n, m, r);
      ShorRound round{++result.rounds, m, "order", s, attempt, attempt.factors};
      result.transcript.push_back(round);
      if (attempt.status == OrderStatus::kOk) {
        result.success = true;
        result.factors = attempt.factors;
        return result;
      }
      // A wrong candidate is worth resampling; a true odd or trivial order means a new base.
      if (attempt.status != OrderStatus::kBadOrder) break;
    }
  }
  return result;
}

RsaResult rsa_demo(u64 n, u64 e, u64 ciphertext, qstate::RandomSource& rng, int max_rounds, std::optional<u64> base) {
  if (ciphertext >= n) throw DomainError("ciphertext must be below the modulus");
  RsaResult out;
  out.shor = shor_factor(n, rng, max_rounds, base);
  if (!out.shor.success) {
    throw DomainError("factoring " + std::to_string(n) + " failed after " + std::to_string(out.shor.rounds) +
                      " rounds");
  }
  out.p = out.shor.factors[0];
  out.q = out.shor.factors[1];
  if (std::gcd(out.p, out.q) != 1 || !is_prime(out.p) || !is_prime(out.q)) {
    throw DomainError("modulus is not a product of two distinct primes");
  }
  out.phi = (out.p - 1) * (out.q - 1);
  const auto d = mod_inverse(e, out.phi);
  if (!d) throw DomainError("public exponent is not invertible mod phi = " + std::to_string(out.phi));
  out.d = *d;
  out.plaintext = mod_pow(ciphertext, out.d, n);
  return out;
}

}  // namespace qugame::qalgo
