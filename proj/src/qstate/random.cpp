#include "qugame/qstate/random.hpp"

#include <limits>
#include <numeric>

#include "qugame/errors.hpp"

namespace qugame::qstate {

double RandomSource::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomSource::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("RandomSource::below: bound must be positive");
  // Rejection sampling on the raw engine word avoids modulo bias.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

std::uint64_t RandomSource::between(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw DomainError("RandomSource::between: empty range");
  return lo + below(hi - lo + 1);
}

std::size_t RandomSource::sample(std::span<const double> weights) {
  if (weights.empty()) throw DomainError("RandomSource::sample: no weights");
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0.0)) throw DomainError("RandomSource::sample: weights sum to zero");
  const double target = uniform() * total;
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] <= 0.0) continue;
    last_positive = k;
    acc += weights[k];
    if (target < acc) return k;
  }
  return last_positive;
}

}  // namespace qugame::qstate
