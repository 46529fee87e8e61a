#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace radix {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated (wrong degree,
/// non-monic input, zero leading coefficient, ...).
class PreconditionError : public Error {
   public:
    using Error::Error;
};

/// Reduction modulo a prime that divides a denominator or the leading coefficient.
class BadPrime : public Error {
   public:
    using Error::Error;
};

class NotSquarefree : public Error {
   public:
    using Error::Error;
};

class MultipleRoots : public Error {
   public:
    using Error::Error;
};

/// An inverse node whose operand cannot be certified nonzero numerically.
class DivisionNearZero : public Error {
   public:
    using Error::Error;
};

/// Precision doubling did not reach agreement within the allowed number of steps.
class PrecisionExhausted : public Error {
   public:
    using Error::Error;
};

class GroupTooLarge : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    enum class Kind { Syntax, MultipleVariables, NegativeExponent };

    ParseError(Kind kind, std::size_t position, const std::string& message)
        : Error(message + " (at position " + std::to_string(position) + ")"),
          kind_(kind),
          position_(position) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t position() const noexcept { return position_; }

   private:
    Kind kind_;
    std::size_t position_;
};

}  // namespace radix
