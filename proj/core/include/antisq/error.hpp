#pragma once

#include <stdexcept>
#include <string>

namespace antisq {

/// A precondition on an argument was violated (wrong alphabet, empty word, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computation ran out of its node budget or failed to stabilize.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A claimed combinatorial property did not hold on the data.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace antisq
