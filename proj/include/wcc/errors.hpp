#pragma once

#include <stdexcept>
#include <string>

namespace wcc {

// Each failure class maps onto one CLI exit status.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : PreconditionError {
  DivisionByZero() : PreconditionError("division by zero") {}
};

}  // namespace wcc
