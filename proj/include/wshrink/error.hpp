#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wshrink {

// Argument outside the mathematical domain of a function (non-positive
// gamma argument, h <= 4, inadmissible p, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Not enough observations for the requested estimator.
class InsufficientDataError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inputs that are individually valid but inconsistent with each other,
// e.g. unbiasing constants computed for a different (m, n).
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A sample with zero spread; every log-spacing estimator degenerates to 0.
class DegenerateSampleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// w(p) == 1: the shrinkage class collapses onto the unbiased estimator and
// the dominance ranges are undefined.
class DegenerateWeightError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An estimator threw inside a Monte Carlo loop.
class ReplicateError : public std::runtime_error {
 public:
  ReplicateError(std::size_t replicate, const std::string& what)
      : std::runtime_error("replicate " + std::to_string(replicate) + ": " + what),
        replicate_(replicate) {}

  std::size_t replicate() const noexcept { return replicate_; }

 private:
  std::size_t replicate_;
};

}  // namespace wshrink
