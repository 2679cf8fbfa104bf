#pragma once

#include <stdexcept>
#include <string>

namespace rcg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad permutation data, degree mismatch, invalid parameters.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured size limit (order, class size, lattice scan, quotient degree) was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace rcg
