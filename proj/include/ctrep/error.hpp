#pragma once

#include <stdexcept>
#include <string>

namespace ctrep {

/// Base exception for every contract violation raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a power trace of a matrix is not a scalar, i.e. the
/// representation that produced the matrix is not constant-trace.
class NonConstantTrace : public Error {
 public:
  explicit NonConstantTrace(int power)
      : Error("non-constant trace: representation is not CT (tr(B^" +
              std::to_string(power) + ") is not a scalar)"),
        power_(power) {}

  int power() const noexcept { return power_; }

 private:
  int power_;
};

}  // namespace ctrep
