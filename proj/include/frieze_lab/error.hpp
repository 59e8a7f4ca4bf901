#pragma once

#include <stdexcept>

namespace frieze_lab {

// Bad input, or a request that is mathematically undefined.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cross-check between two independent computations disagreed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace frieze_lab
