#pragma once

#include <stdexcept>
#include <string>

#include "shockcast/quarter.hpp"

namespace shockcast {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid value in an otherwise well-shaped input (e.g. log of a non-positive level).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Series too short for the requested operation.
class LengthError : public Error {
 public:
  using Error::Error;
};

// Wrong number of arguments supplied (e.g. integration initial values).
class ArityError : public Error {
 public:
  using Error::Error;
};

// Coefficients outside the stationary / invertible region.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

// Non-finite or non-positive quantities encountered while filtering.
class InstabilityError : public Error {
 public:
  using Error::Error;
};

// Series or panels that do not share a common window or sector set.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

// Requested horizon is not covered by the available data.
class WindowError : public Error {
 public:
  using Error::Error;
};

class GapError : public Error {
 public:
  GapError(const std::string& what, Quarter missing) : Error(what), missing_(missing) {}
  Quarter missing() const noexcept { return missing_; }

 private:
  Quarter missing_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int row, int column)
      : Error(what), row_(row), column_(column) {}
  // 1-based, header row is row 1.
  int row() const noexcept { return row_; }
  int column() const noexcept { return column_; }

 private:
  int row_;
  int column_;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Transport or remote-side failure talking to the BEA API.
class RetrievalError : public Error {
 public:
  using Error::Error;
};

// BEA response did not have the expected structure.
class MappingError : public Error {
 public:
  using Error::Error;
};

class AuthConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace shockcast
