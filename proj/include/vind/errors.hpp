#pragma once

#include <stdexcept>
#include <string>

namespace vind {

// Invalid argument outside a distribution's / operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A two-sided finite-difference construction left the valid parameter
// region; caller should switch to a one-sided difference.
class BoundaryError : public std::runtime_error {
 public:
  BoundaryError(std::string block, const std::string& what)
      : std::runtime_error(what), block_(std::move(block)) {}
  const std::string& block() const { return block_; }

 private:
  std::string block_;
};

// Non-finite quantity encountered while accumulating an estimate.
class EstimatorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// API misuse: a required capability (model gradient, base randomness) is
// missing.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vind
