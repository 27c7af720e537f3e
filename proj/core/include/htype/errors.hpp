#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace htype {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (m, n) does not admit n anticommuting orthogonal complex structures on R^m.
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

/// n = 0: the abelian case has no center and is rejected.
class DegenerateStructureError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of the operation (lambda <= 0, bad index, p out of range...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Dimension mismatch between group points or with the structure.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A field returned a non-finite value at a quadrature node.
class IntegrationError : public Error {
 public:
  using Error::Error;
};

class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

class AssemblyError : public Error {
 public:
  using Error::Error;
};

/// Cholesky factorisation of a matrix expected to be SPD failed.
class FactorizationError : public Error {
 public:
  using Error::Error;
};

/// Galerkin mass matrix is too ill-conditioned; carries the measured condition number.
class ConditioningError : public Error {
 public:
  ConditioningError(const std::string& what, double condition)
      : Error(what), condition_(condition) {}
  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

/// Descent could not reduce the objective; carries the objective history so far.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, std::vector<double> history)
      : Error(what), history_(std::move(history)) {}
  const std::vector<double>& history() const noexcept { return history_; }

 private:
  std::vector<double> history_;
};

}  // namespace htype
