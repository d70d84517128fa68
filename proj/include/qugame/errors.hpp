#pragma once

#include <stdexcept>
#include <string>

namespace qugame {

/// Precondition violated: bad dimensions, out-of-range digits, non-unitary input, etc.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A configured size cap would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qugame
