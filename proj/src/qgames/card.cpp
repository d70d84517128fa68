#include "qugame/qgames/card.hpp"

#include <algorithm>

#include "qugame/errors.hpp"
#include "qugame/qstate/gates.hpp"

namespace qugame::qgames {

namespace {

int majority_face(const std::array<int, 3>& r) { return r[0] + r[1] + r[2] >= 2 ? 1 : 0; }

void check_faces(const std::array<int, 3>& r) {
  for (int f : r) {
    if (f != 0 && f != 1) throw DomainError("card faces are 0 (circle) or 1 (dot)");
  }
  // The circle card always shows a circle and the dot card a dot.
  if (r[0] == r[1] && r[1] == r[2]) throw DomainError("no deal shows three equal faces");
}

void check_draw(int draw) {
  if (draw < 0 || draw > 2) throw DomainError("draw must be a box position 0..2");
}

}  // namespace

std::array<int, 3> card_faces(const CardDeal& deal) {
  std::array<Card, 3> sorted = deal.cards;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<Card, 3>{Card::kCircles, Card::kDots, Card::kMixed}) {
    throw DomainError("a deal holds each card exactly once");
  }
  if (deal.mixed_up != 0 && deal.mixed_up != 1) throw DomainError("the mixed card shows 0 or 1");
  std::array<int, 3> r{};
  for (int k = 0; k < 3; ++k) {
    switch (deal.cards[static_cast<std::size_t>(k)]) {
      case Card::kCircles: r[static_cast<std::size_t>(k)] = 0; break;
      case Card::kDots: r[static_cast<std::size_t>(k)] = 1; break;
      case Card::kMixed: r[static_cast<std::size_t>(k)] = deal.mixed_up; break;
    }
  }
  return r;
}

UnitaryMatrix card_phase(int r) {
  if (r != 0 && r != 1) throw DomainError("card faces are 0 or 1");
  return qstate::standard_gate(qstate::Gate::kPhase, r);
}

StateVector card_query(const std::array<int, 3>& r) {
  const UnitaryMatrix h = qstate::hadamard();
  StateVector s = qstate::basis_state(qstate::qubits(3), {0, 0, 0});
  for (int k = 0; k < 3; ++k) s = qstate::apply(s, h * card_phase(r[static_cast<std::size_t>(k)]) * h, {k});
  return s;
}

GameReport card_game_round(const std::array<int, 3>& r, int draw, qstate::RandomSource& rng,
                           std::optional<int> mixed_position) {
  check_faces(r);
  check_draw(draw);
  GameReport report;
  report.game = "card";
  report.params = {{"faces", r}, {"draw", draw}};
  const UnitaryMatrix h = qstate::hadamard();
  Recorder rec(report, qstate::basis_state(qstate::qubits(3), {0, 0, 0}));
  for (int k = 0; k < 3; ++k) rec.apply("Bob", "H on query qubit " + std::to_string(k), h, {k});
  for (int k = 0; k < 3; ++k) {
    rec.apply("box", "U_" + std::to_string(k) + " = diag(1, e^{i pi r})", card_phase(r[static_cast<std::size_t>(k)]),
              {k});
  }
  for (int k = 0; k < 3; ++k) rec.apply("Bob", "H on query qubit " + std::to_string(k), h, {k});
  rec.finish();
  const auto m = qstate::measure_computational(rec.state(), rng);
  rec.note("Bob", "read the up faces " + m.outcome_label);

  const int major = majority_face(r);
  std::vector<int> candidates;
  for (int k = 0; k < 3; ++k) {
    if (r[static_cast<std::size_t>(k)] == major) candidates.push_back(k);
  }
  report.details["majority_face"] = major;
  double bob = 0.0;
  if (r[static_cast<std::size_t>(draw)] != major) {
    report.outcome = "Bob withdraws";
    rec.note("Bob", "withdraw");
  } else {
    int mixed = 0;
    if (mixed_position) {
      if (std::find(candidates.begin(), candidates.end(), *mixed_position) == candidates.end()) {
        throw DomainError("the mixed card must show the majority face");
      }
      mixed = *mixed_position;
    } else {
      mixed = candidates[rng.below(candidates.size())];
    }
    report.details["mixed_position"] = mixed;
    bob = draw == mixed ? 1.0 : -1.0;
    report.outcome = draw == mixed ? "Bob drew the mixed card" : "Bob drew a same-faced card";
    rec.note("Bob", "play the drawn card");
  }
  report.payoffs = {{"alice", -bob}, {"bob", bob}};
  return report;
}

int card_payoff(const CardDeal& deal, int draw) {
  check_draw(draw);
  const std::array<int, 3> r = card_faces(deal);
  if (r[static_cast<std::size_t>(draw)] != majority_face(r)) return 0;
  return deal.cards[static_cast<std::size_t>(draw)] == Card::kMixed ? 1 : -1;
}

CardEnumeration card_game_enumeration() {
  CardEnumeration e;
  std::array<Card, 3> cards{Card::kCircles, Card::kDots, Card::kMixed};
  do {
    for (int up = 0; up < 2; ++up) {
      for (int draw = 0; draw < 3; ++draw) {
        e.total += card_payoff({cards, up}, draw);
        ++e.cases;
      }
    }
  } while (std::next_permutation(cards.begin(), cards.end()));
  e.mean = e.total / e.cases;
  return e;
}

}  // namespace qugame::qgames
