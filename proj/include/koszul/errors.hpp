#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace koszul {

/// Operand sizes disagree (permutation vs. sequence, word vs. sequence, ...).
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Input outside the domain of the operation (n < 2, invalid bijection, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Requested size exceeds an exhaustive or dense-table bound.
class ResourceError : public std::length_error {
public:
  using std::length_error::length_error;
};

/// Malformed text input. `position()` is the 0-based character offset.
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " (at column " +
                              std::to_string(position + 1) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace koszul
