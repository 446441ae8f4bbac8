#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace codedomain {

/// A caller broke a documented precondition (bad length, alphabet, index...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An algorithm detected that its own postcondition failed. Indicates either a
/// bug or an input that does not satisfy a structural assumption (for example
/// a non-monotone domain handed to the exceptional-ball machinery).
class InternalContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exhaustive enumeration would exceed the configured cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Puncturing requires minimum distance at least 2.
class DistanceTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The code has no non-constant coordinate (a singleton), so it cannot be
/// shortened.
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SeedNotFound : public std::runtime_error {
 public:
  SeedNotFound(const std::string& what, std::vector<std::string> log)
      : std::runtime_error(what), log_(std::move(log)) {}

  const std::vector<std::string>& log() const noexcept { return log_; }

 private:
  std::vector<std::string> log_;
};

}  // namespace codedomain
