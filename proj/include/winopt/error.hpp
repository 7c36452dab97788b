#pragma once

#include <stdexcept>
#include <string>

namespace winopt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (EPW header/rows, config files, CSV tables).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Wrong number of records, or series that do not line up.
class LengthError : public Error {
 public:
  using Error::Error;
};

/// Room geometry that cannot be built (window larger than its wall, ...).
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// A value outside the range its type allows.
class RangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace winopt
