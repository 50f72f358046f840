#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chromhom {

/// Malformed textual input (partition strings, graph files). Carries the
/// offending character offset or line number when one is known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Input is well formed but outside the configured computation budget.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A formula evaluated outside the region where it is known to hold.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal consistency check failed: inexact division in the hook
/// formula or projector rank, a negative multiplicity, a d^2 != 0, etc.
/// Always a bug, never a property of the input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace chromhom
