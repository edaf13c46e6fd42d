#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tricover {

// Root of every error the library raises. Input-shaped errors (everything
// except ConsistencyError) map to CLI exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition was violated by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Parameters outside the numerical domain where a formula is meaningful.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Two classes from different (genus, symmetric index) ambients were combined.
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

// The operation is well defined in principle but not implemented for this
// input (push-pull on monomials containing theta).
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

// Two independent routes to the same number disagreed. Never expected.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Nagata invariant of the wrong parity for (g, h).
class ParityError : public Error {
 public:
  using Error::Error;
};

// Nagata invariant outside -h <= delta <= (g - 3h + 2)/3.
class WindowError : public Error {
 public:
  using Error::Error;
};

// Ramification split t not congruent to 2g - 2 mod 3.
class CongruenceError : public Error {
 public:
  using Error::Error;
};

// Ramification split t outside [0, g - 3h + 2].
class RangeError : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind { kSyntax, kDivisionByZero, kBn1Mismatch, kBadExponent };

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t position, const std::string& message)
      : Error("at position " + std::to_string(position) + ": " + message),
        kind_(kind),
        position_(position) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  // 1-based character offset into the input.
  std::size_t position() const noexcept { return position_; }

 private:
  ParseErrorKind kind_;
  std::size_t position_;
};

}  // namespace tricover
