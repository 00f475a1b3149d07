#pragma once

#include <stdexcept>
#include <string>

namespace gralg {

/// Base for all domain failures raised by the library (bad parameters, singular
/// elements, malformed input files).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configurable enumeration or size cap was hit before the computation finished.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace gralg
