#pragma once

#include <stdexcept>
#include <string>

namespace conceptkit {

/// Base class for all conceptkit errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two relations/orders were combined over incompatible carriers.
class CarrierMismatchError : public Error {
public:
  using Error::Error;
};

/// An element name was not found in the carrier it was used with.
class UnknownElementError : public Error {
public:
  using Error::Error;
};

/// A carrier was constructed with a repeated element name.
class DuplicateElementError : public Error {
public:
  using Error::Error;
};

/// A structure failed its construction-time invariants
/// (non-transitive preorder, non-monotone map, invalid context, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// A relative pairing/copairing precondition failed.
class ConstraintError : public Error {
public:
  using Error::Error;
};

/// An enumerator was asked to run beyond its configured size bound.
class CapacityError : public Error {
public:
  using Error::Error;
};

/// Malformed input file; carries a 1-based line number.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

}  // namespace conceptkit
