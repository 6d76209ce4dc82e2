#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locbasis {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// An operation needed more certified precision than its inputs carry.
class PrecisionShortfall : public Error {
public:
  using Error::Error;
};

/// A series has no stored terms inside its precision window, so it has no
/// certified initial exponent.
class ZeroUpToPrecision : public Error {
public:
  using Error::Error;
};

class SingularMatrix : public Error {
public:
  using Error::Error;
};

class NotRegular : public Error {
public:
  using Error::Error;
};

class BudgetExceeded : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace locbasis
