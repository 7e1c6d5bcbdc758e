#pragma once

#include <stdexcept>
#include <string>

namespace ellmf {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the mathematical input failed (zero class, point outside
/// the fundamental domain, non-matching Betti table, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
  public:
    using Error::Error;
};

}  // namespace ellmf
