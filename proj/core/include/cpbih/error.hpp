#pragma once

#include <stdexcept>
#include <string>

namespace cpbih {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of incompatible length.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Zero vector, rank-deficient frame, or a division by a vanishing norm.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A parameter map produced non-finite output or is not smooth at the point.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// The induced tangent map has rank below two.
class ImmersionError : public Error {
 public:
  using Error::Error;
};

/// An ODE integration left the frame bundle.
class IntegrationError : public Error {
 public:
  using Error::Error;
};

/// An algebraic system has no admissible solution.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// Two coordinate flows of a moving frame fail to commute.
class IntegrabilityError : public Error {
 public:
  using Error::Error;
};

/// A helix class that does not exist for the given curvatures.
class ClassError : public Error {
 public:
  using Error::Error;
};

}  // namespace cpbih
