#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Bad caller input: negative exponents, zero denominators, bad scripts.
class MalformedInput : public Error {
  public:
    using Error::Error;
};

/// A leading-form quantity was requested for the zero element.
class UndefinedOnZero : public Error {
  public:
    explicit UndefinedOnZero(const std::string& what)
        : Error(what + " is undefined on the zero element") {}
};

/// Element lies outside the sector an operation requires (W_+ / bar W_+ / k[XY]).
class WrongSector : public Error {
  public:
    using Error::Error;
};

class NotHomogeneous : public Error {
  public:
    using Error::Error;
};

/// Any other violated precondition.
class ContractError : public Error {
  public:
    using Error::Error;
};

/// Total-degree bound too small for the requested computation.
class BoundError : public Error {
  public:
    using Error::Error;
};

/// The image of a derivation left the truncated span.
class BoundEscape : public BoundError {
  public:
    using BoundError::BoundError;
};

/// Element is not in the span of a computed centralizer basis.
class MembershipError : public Error {
  public:
    using Error::Error;
};

class DegenerateMonoid : public Error {
  public:
    using Error::Error;
};

/// P lies in k[XY], where no Q with [Q,P] = 1 exists.
class ImpossiblePair : public Error {
  public:
    using Error::Error;
};

/// A proven identity failed on computed data. Always a bug.
class InternalInconsistency : public Error {
  public:
    using Error::Error;
};

class ParseError : public MalformedInput {
  public:
    ParseError(const std::string& message, int line, int column)
        : MalformedInput(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

  private:
    int line_;
    int column_;
};

}  // namespace weyl
