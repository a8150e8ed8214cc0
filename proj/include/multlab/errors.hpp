#pragma once

#include <stdexcept>
#include <string>

namespace multlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Gamma (or a related function) evaluated at a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Grid dimensions of two operands do not agree.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Not enough usable data for a fit.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// The data admits no meaningful fit (e.g. no growth at all).
class DegenerateData : public Error {
 public:
  using Error::Error;
};

/// A grid cannot resolve the requested expansion.
class AliasingError : public Error {
 public:
  using Error::Error;
};

/// Quadrature did not reach its tolerance; carries the achieved bound.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double achieved_error)
      : Error(what + " (achieved error " + std::to_string(achieved_error) + ")"),
        achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

}  // namespace multlab
