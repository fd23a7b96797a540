#pragma once

#include <stdexcept>
#include <string>

namespace pcanon {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad Cartan data, out-of-range generator, bad JSON shape.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Elements or algebra values built over different root data / coset tables.
class DatumMismatch : public Error {
 public:
  using Error::Error;
};

// A configured length or enumeration cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// The requested value does not exist, e.g. F^{-1} of an element outside W_p.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace pcanon
