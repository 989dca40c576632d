#pragma once

#include <stdexcept>
#include <string>

namespace lcv {

/// Caller broke an operation's precondition (mismatched truncation orders,
/// non-square matrix, coefficient index out of range).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computed value violated an identity the pipeline guarantees. Always a bug.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sequence window too short for the requested operator depth.
class WindowError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Size exceeds a default computation cap and no override was given.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lcv
