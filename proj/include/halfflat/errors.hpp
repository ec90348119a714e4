#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace halfflat {

/// Malformed notation or form expression; position is a 0-based offset into
/// the original input text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A precondition on the algebraic input failed (Jacobi identity, coherence,
/// unimodularity, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace halfflat
