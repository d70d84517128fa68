#pragma once

#include <cstdint>

#include "qugame/qgames/report.hpp"

namespace qugame::qgames {

/// I: Bob amplifies Alice's number with Grover rotations. II: Bob recovers a
/// secret dot-product mask with one Bernstein-Vazirani query.
enum class GuessVariant { kGrover, kBernsteinVazirani };

/// Bob wins when his measured guess equals a. Throws DomainError when a >= 2^n.
GameReport guess_number_game(GuessVariant variant, int n, std::uint64_t a, qstate::RandomSource& rng);

}  // namespace qugame::qgames
