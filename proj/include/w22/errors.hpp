#pragma once

#include <stdexcept>
#include <string>

namespace w22 {

/// Malformed textual input (rationals, JSON records, CLI flags).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// A well-formed request that violates an operation's precondition.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace w22
