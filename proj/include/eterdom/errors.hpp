#pragma once

#include <stdexcept>
#include <string>

namespace eterdom {

/// Precondition on dimensions or coordinates violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A strategy found itself in a state it has no answer for.
class StrategyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Moves could not be applied to a configuration (missing source, collision).
class TransitionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No target pattern / perfect matching exists for a requested response.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact computation would exceed its configured size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eterdom
