#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crenrich {

/// Degenerate or otherwise unusable triangle geometry.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (x <= 0 for
/// ln_gamma, alpha <= -1, a point outside a triangle, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Argument violating an API contract that is not a domain issue
/// (index out of 1..3, node count out of range, empty lists).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameter alpha = -6/7, where the C_alpha degrees of freedom are not
/// unisolvent.
class SingularFamilyError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A quadrature rule paired with a functional whose weight it does not match.
class MisuseError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed Triangle .node/.ele input. `line()` is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& file, std::size_t line, const std::string& what)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace crenrich
