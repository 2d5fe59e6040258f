#pragma once

#include <stdexcept>

namespace graev {

// Error taxonomy shared across the library:
//   argument_error   caller passed inconsistent arguments (size/alphabet mismatch)
//   structural_error malformed input data (matrices, dendrograms, parse problems)
//   diameter_error   operation requires diameter <= 1 and the space exceeds it
//   cap_error        enumeration oracle asked to run beyond its configured cap
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct argument_error : error {
  using error::error;
};
struct structural_error : error {
  using error::error;
};
struct diameter_error : error {
  using error::error;
};
struct cap_error : error {
  using error::error;
};

}  // namespace graev
