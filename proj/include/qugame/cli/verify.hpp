#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qugame/cgame/bimatrix.hpp"

namespace qugame::cli {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  /// Replaces the prisoner's dilemma payoffs used by the pd.* checks.
  std::optional<cgame::Bimatrix> pd_payoffs;
};

/// Recomputes every published golden value.
std::vector<Check> verify_all(const VerifyOptions& options = {});

}  // namespace qugame::cli
