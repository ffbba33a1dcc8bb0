#pragma once

#include <stdexcept>
#include <string>

namespace oscone {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad profile, wrong coefficient count, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class BadDimension : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class BadPrime : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ZeroFiberPoint : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class BudgetExceeded : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InconsistentResolution : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NonIntegerGenus : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Series whose constant term is not invertible.
class NonUnit : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagree. Always a bug.
class InternalMismatch : public Error {
 public:
  using Error::Error;
};

/// The input violates a standing hypothesis of the theory (characteristic 2,
/// wild ramification). Reported separately from plain usage errors.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

class WildCharacteristic : public HypothesisViolation {
 public:
  using HypothesisViolation::HypothesisViolation;
};

class WildRamification : public HypothesisViolation {
 public:
  using HypothesisViolation::HypothesisViolation;
};

}  // namespace oscone
