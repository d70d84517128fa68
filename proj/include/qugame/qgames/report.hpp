#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qugame/qstate/measure.hpp"
#include "qugame/qstate/random.hpp"
#include "qugame/qstate/state_vector.hpp"
#include "qugame/qstate/unitary.hpp"

namespace qugame::qgames {

using qstate::StateVector;
using qstate::UnitaryMatrix;

/// One transcript line. A step applies op, or mixes the unitary branches of
/// mixture, or measures targets in basis with the recorded outcome. A step with
/// none of these is an annotation.
struct Step {
  std::string actor;
  std::string action;
  std::vector<int> targets;
  std::optional<UnitaryMatrix> op;
  std::vector<std::pair<double, UnitaryMatrix>> mixture;
  std::vector<StateVector> basis;
  int outcome = -1;
  /// Short rendering of the state after the step.
  std::string digest;
};

/// Record of one protocol run. When initial is set, probabilities holds the
/// computational-basis distribution of the final register keyed by ket label
/// and the transcript replays to it. Otherwise it holds named event
/// probabilities.
struct GameReport {
  std::string game;
  nlohmann::json params = nlohmann::json::object();
  std::optional<StateVector> initial;
  std::vector<Step> transcript;
  std::string outcome;
  std::map<std::string, double> payoffs;
  std::map<std::string, double> probabilities;
  nlohmann::json details = nlohmann::json::object();
};

/// Classical mixture of pure branches. Probabilities below 1e-14 are dropped.
class Ensemble {
 public:
  explicit Ensemble(StateVector initial);

  void apply(const UnitaryMatrix& u, const std::vector<int>& targets);
  void mix(const std::vector<std::pair<double, UnitaryMatrix>>& branches, const std::vector<int>& targets);
  /// Conditions every branch on outcome k of a measurement of targets in
  /// basis. Returns the outcome probability. Throws DomainError when it is zero.
  double condition(const std::vector<int>& targets, const std::vector<StateVector>& basis, int k);

  bool is_pure() const { return branches_.size() == 1; }
  /// The single branch. Throws DomainError on a mixture.
  const StateVector& pure_state() const;
  const std::vector<std::pair<double, StateVector>>& branches() const { return branches_; }
  const qstate::Dims& dims() const { return branches_.front().second.dims(); }

  /// Computational-basis probabilities of the whole register.
  std::vector<double> probabilities() const;
  std::string describe() const;

 private:
  std::vector<std::pair<double, StateVector>> branches_;
};

/// Builds a transcript while evolving an ensemble.
class Recorder {
 public:
  Recorder(GameReport& report, StateVector initial);

  const Ensemble& ensemble() const { return ens_; }
  const StateVector& state() const { return ens_.pure_state(); }

  void apply(const std::string& actor, const std::string& action, const UnitaryMatrix& u,
             const std::vector<int>& targets);
  void mix(const std::string& actor, const std::string& action,
           const std::vector<std::pair<double, UnitaryMatrix>>& branches, const std::vector<int>& targets);
  /// Samples (or takes the forced) outcome of a measurement of targets and
  /// collapses the ensemble onto it.
  qstate::MeasurementRecord measure(const std::string& actor, const std::string& action,
                                    const std::vector<int>& targets, const std::vector<StateVector>& basis,
                                    qstate::RandomSource& rng, std::optional<int> forced = std::nullopt,
                                    const std::vector<std::string>& labels = {});
  void note(const std::string& actor, const std::string& action);

  /// Writes the final computational distribution into the report.
  void finish();

 private:
  GameReport& report_;
  Ensemble ens_;
};

/// Label -> probability, skipping entries below 1e-12.
std::map<std::string, double> distribution(const qstate::Dims& dims, const std::vector<double>& probs);

/// Re-runs the transcript from report.initial and returns the final
/// computational distribution. Throws DomainError when initial is unset.
std::map<std::string, double> replay(const GameReport& report);

nlohmann::json to_json(const GameReport& report);

}  // namespace qugame::qgames
