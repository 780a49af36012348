#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polycode {

// Malformed polynomial text. offset is the byte position of the bad token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Operation undefined for its arguments (division by zero, index out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input violates a standing assumption (reducible P, L < 2, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A formula was called outside the parameter regime it covers.
class RegimeError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Exhaustive enumeration refused because the dimension exceeds the cap.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computations disagree; the implementation is wrong.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace polycode
