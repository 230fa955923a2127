#pragma once

#include <stdexcept>
#include <string>

namespace gsqg {

/// Invalid grid, config key, or unsupported parameter combination.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter outside the mathematical domain of an operator (e.g. beta not in (0,1)).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Block index or similar outside the range a grid can represent.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Inconsistent solver state (e.g. far-field accumulator behind the field time).
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Simulation aborted: NaN or growth past the blow-up threshold.
class SimulationAbort : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gsqg
