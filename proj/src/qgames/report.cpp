#include "qugame/qgames/report.hpp"

#include <cmath>
#include <sstream>

#include "qugame/errors.hpp"

namespace qugame::qgames {

namespace {

constexpr double kDropWeight = 1e-14;

nlohmann::json complex_json(qstate::Complex c) { return nlohmann::json::array({c.real(), c.imag()}); }

}  // namespace

Ensemble::Ensemble(StateVector initial) { branches_.emplace_back(1.0, std::move(initial)); }

void Ensemble::apply(const UnitaryMatrix& u, const std::vector<int>& targets) {
  for (auto& [w, s] : branches_) s = qstate::apply(s, u, targets);
}

void Ensemble::mix(const std::vector<std::pair<double, UnitaryMatrix>>& branches, const std::vector<int>& targets) {
  double total = 0.0;
  for (const auto& [p, u] : branches) {
    if (!(p >= 0.0)) throw DomainError("mixture weights must be nonnegative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-10) throw DomainError("mixture weights must sum to 1");
  std::vector<std::pair<double, StateVector>> next;
  for (const auto& [w, s] : branches_) {
    for (const auto& [p, u] : branches) {
      if (w * p > kDropWeight) next.emplace_back(w * p, qstate::apply(s, u, targets));
    }
  }
  branches_ = std::move(next);
}

double Ensemble::condition(const std::vector<int>& targets, const std::vector<StateVector>& basis, int k) {
  if (k < 0 || k >= static_cast<int>(basis.size())) throw DomainError("measurement outcome out of range");
  const qstate::Dims& d = dims();
  const bool whole = static_cast<int>(targets.size()) == static_cast<int>(d.size());
  std::vector<std::pair<double, StateVector>> next;
  double total = 0.0;
  for (const auto& [w, s] : branches_) {
    // Full-register post state: |b><b| on the targets, identity elsewhere.
    Eigen::VectorXcd post;
    if (whole) {
      const qstate::Complex amp = qstate::inner(basis[static_cast<std::size_t>(k)], s);
      post = amp * basis[static_cast<std::size_t>(k)].amps();
    } else {
      const Eigen::MatrixXcd proj =
          basis[static_cast<std::size_t>(k)].amps() * basis[static_cast<std::size_t>(k)].amps().adjoint();
      post = qstate::apply_operator(d, s.amps(), proj, targets);
    }
    const double p = post.squaredNorm();
    if (w * p > kDropWeight) {
      next.emplace_back(w * p, StateVector::normalized(d, post));
      total += w * p;
    }
  }
  if (next.empty()) throw DomainError("conditioning on an outcome of probability zero");
  for (auto& [w, s] : next) w /= total;
  branches_ = std::move(next);
  return total;
}

const StateVector& Ensemble::pure_state() const {
  if (!is_pure()) throw DomainError("the register is in a classical mixture");
  return branches_.front().second;
}

std::vector<double> Ensemble::probabilities() const {
  std::vector<double> out(branches_.front().second.size(), 0.0);
  for (const auto& [w, s] : branches_) {
    const auto p = s.probabilities();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += w * p[i];
  }
  return out;
}

std::string Ensemble::describe() const {
  if (is_pure()) return qstate::describe(branches_.front().second);
  std::ostringstream os;
  os << "mixture";
  for (const auto& [w, s] : branches_) os << " [" << w << ": " << qstate::describe(s) << "]";
  return os.str();
}

Recorder::Recorder(GameReport& report, StateVector initial) : report_(report), ens_(initial) {
  report_.initial = std::move(initial);
}

void Recorder::apply(const std::string& actor, const std::string& action, const UnitaryMatrix& u,
                     const std::vector<int>& targets) {
  ens_.apply(u, targets);
  Step s{actor, action, targets, u, {}, {}, -1, ens_.describe()};
  report_.transcript.push_back(std::move(s));
}

void Recorder::mix(const std::string& actor, const std::string& action,
                   const std::vector<std::pair<double, UnitaryMatrix>>& branches, const std::vector<int>& targets) {
  ens_.mix(branches, targets);
  Step s{actor, action, targets, std::nullopt, branches, {}, -1, ens_.describe()};
  report_.transcript.push_back(std::move(s));
}

qstate::MeasurementRecord Recorder::measure(const std::string& actor, const std::string& action,
                                            const std::vector<int>& targets, const std::vector<StateVector>& basis,
                                            qstate::RandomSource& rng, std::optional<int> forced,
                                            const std::vector<std::string>& labels) {
  const StateVector& s = ens_.pure_state();
  qstate::MeasurementRecord rec = static_cast<int>(targets.size()) == s.num_subsystems()
                                      ? qstate::measure(s, basis, rng, forced, labels)
                                      : qstate::measure_subsystems(s, targets, basis, rng, forced, labels);
  ens_.condition(targets, basis, rec.outcome_index);
  Step step{actor, action + " -> " + rec.outcome_label, targets, std::nullopt, {}, basis, rec.outcome_index,
            ens_.describe()};
  report_.transcript.push_back(std::move(step));
  return rec;
}

void Recorder::note(const std::string& actor, const std::string& action) {
  report_.transcript.push_back(Step{actor, action, {}, std::nullopt, {}, {}, -1, ens_.describe()});
}

void Recorder::finish() { report_.probabilities = distribution(ens_.dims(), ens_.probabilities()); }

std::map<std::string, double> distribution(const qstate::Dims& dims, const std::vector<double>& probs) {
  std::map<std::string, double> out;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] > 1e-12) out[qstate::ket_label(dims, i)] = probs[i];
  }
  return out;
}

std::map<std::string, double> replay(const GameReport& report) {
  if (!report.initial) throw DomainError("report has no initial state to replay from");
  Ensemble ens(*report.initial);
  for (const Step& s : report.transcript) {
    if (s.op) {
      ens.apply(*s.op, s.targets);
    } else if (!s.mixture.empty()) {
      ens.mix(s.mixture, s.targets);
    } else if (!s.basis.empty()) {
      ens.condition(s.targets, s.basis, s.outcome);
    }
  }
  return distribution(ens.dims(), ens.probabilities());
}

nlohmann::json to_json(const GameReport& report) {
  nlohmann::json j;
  j["game"] = report.game;
  j["params"] = report.params;
  nlohmann::json steps = nlohmann::json::array();
  for (const Step& s : report.transcript) {
    nlohmann::json e;
    e["actor"] = s.actor;
    e["action"] = s.action;
    e["targets"] = s.targets;
    e["state"] = s.digest;
    if (s.outcome >= 0) e["outcome"] = s.outcome;
    steps.push_back(std::move(e));
  }
  j["transcript"] = std::move(steps);
  j["outcome"] = report.outcome;
  j["payoffs"] = report.payoffs;
  j["probabilities"] = report.probabilities;
  j["details"] = report.details;
  if (report.initial) {
    nlohmann::json amps = nlohmann::json::array();
    for (std::size_t i = 0; i < report.initial->size(); ++i) amps.push_back(complex_json((*report.initial)[i]));
    j["initial"] = {{"dims", report.initial->dims()}, {"amplitudes", std::move(amps)}};
  }
  return j;
}

}  // namespace qugame::qgames
