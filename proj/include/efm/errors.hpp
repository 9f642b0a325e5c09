#ifndef EFM_ERRORS_HPP
#define EFM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace efm {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad user-supplied data: malformed JSON, out-of-range arguments, ...
class InputError : public Error {
  public:
    explicit InputError(const std::string& what) : Error(what) {}
};

/// Radicand is negative or not squarefree.
class InvalidRadicandError : public InputError {
  public:
    explicit InvalidRadicandError(const std::string& what) : InputError(what) {}
};

/// Two quadratic-field values with distinct irrational parts were mixed.
class RadicandMismatchError : public InputError {
  public:
    explicit RadicandMismatchError(const std::string& what) : InputError(what) {}
};

/// Division by zero and friends.
class ArithmeticError : public Error {
  public:
    explicit ArithmeticError(const std::string& what) : Error(what) {}
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public InputError {
  public:
    explicit DomainError(const std::string& what) : InputError(what) {}
};

/// Zero polynomial (or similar) fed into a root-counting routine.
class DegenerateInputError : public InputError {
  public:
    explicit DegenerateInputError(const std::string& what) : InputError(what) {}
};

/// Operation defined on finite point sets was called on intervals.
class UnsupportedShapeError : public InputError {
  public:
    explicit UnsupportedShapeError(const std::string& what) : InputError(what) {}
};

/// Polynomial constant term does not match the requested bound regime.
class RegimeMismatchError : public InputError {
  public:
    explicit RegimeMismatchError(const std::string& what) : InputError(what) {}
};

/// A bound regime condition (a)/(b)/(c)/(d) failed.
class ConditionError : public Error {
  public:
    ConditionError(char which, const std::string& what) : Error(what), condition(which) {}
    char condition;  // 'a', 'b', 'c' or 'd'
};

/// psi(1/r) has the wrong sign for the requested regime.
class UnusablePolynomialError : public Error {
  public:
    explicit UnusablePolynomialError(const std::string& what) : Error(what) {}
};

/// Violated internal assertion; indicates a bug, not bad input.
class InternalError : public Error {
  public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace efm

#endif
