#pragma once

#include <stdexcept>
#include <string>

namespace subosc {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument is outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A search exhausted its configured resource cap (order, dilation, ...).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Coefficient generation produced non-finite values.
class SynthesisError : public Error {
 public:
  using Error::Error;
};

// Assembly was requested from a plan that does not permit it.
class PlanError : public Error {
 public:
  using Error::Error;
};

// A numerical routine produced non-finite output.
class NumericError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace subosc
