#pragma once

#include <optional>
#include <string>

#include "qugame/qgames/teleport.hpp"

namespace qugame::qgames {

/// Gerald's correction for Alice's Bell outcome and Bob's x-basis outcome (0 x+, 1 x-).
UnitaryMatrix secret_qubit_correction(int bell_outcome, int bob_outcome);

/// Alice holds the secret and the first GHZ qubit; Bob and Gerald hold the
/// others. Alice Bell-measures, Bob measures in the x basis and Gerald applies
/// the correction. details record what Gerald can reach with one message only.
ProtocolResult secret_share_qubit(const StateVector& secret, qstate::RandomSource& rng,
                                  std::optional<int> forced_bell = std::nullopt,
                                  std::optional<int> forced_bob = std::nullopt);

enum class SharePair { kAliceBob, kBobGerald, kAliceGerald };

std::string to_string(SharePair pair);
/// "alice-bob", "bob-gerald" or "alice-gerald". Throws DomainError otherwise.
SharePair share_pair_from_name(const std::string& name);

/// a|0> + b|1> + c|2> -> a(|000>+|111>+|222>) + b(|012>+|120>+|201>) + c(|021>+|102>+|210>), normalized.
StateVector qutrit_encode(const StateVector& secret);

/// The pair performs two modulo-3 additions, leaving the secret on its first
/// member. Throws DomainError unless secret is one qutrit.
ProtocolResult secret_share_qutrit(const StateVector& secret, SharePair pair);

}  // namespace qugame::qgames
