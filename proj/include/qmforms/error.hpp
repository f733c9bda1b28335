#pragma once

#include <stdexcept>
#include <string>

namespace qmf {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonUnitSeries : public Error {
 public:
  NonUnitSeries() : Error("series has zero constant term and is not invertible") {}
};

class NoSolution : public Error {
 public:
  using Error::Error;
};

class InsufficientOrder : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// Odd weight, 2n > m, inhomogeneous terms and the like.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class NotConvergent : public Error {
 public:
  using Error::Error;
};

class DegenerateCurve : public Error {
 public:
  using Error::Error;
};

class BranchAmbiguity : public Error {
 public:
  using Error::Error;
};

// A result that theory guarantees (e.g. Hecke closure) did not hold.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qmf
