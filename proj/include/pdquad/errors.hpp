#pragma once

#include <stdexcept>
#include <string>

namespace pdquad {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched rings, monomial lengths, matrix shapes.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's documented precondition.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Dimension or height requested for the unit ideal.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A quadric does not lie in the ideal (x, y) it is asked to be split over.
class RepresentationError : public Error {
 public:
  using Error::Error;
};

/// Height or other mathematical precondition of a check failed.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A generalized zero exists only over a proper extension of the base field.
class ExtensionNeededError : public Error {
 public:
  ExtensionNeededError(const std::string& what, std::string binary_form)
      : Error(what), binary_form_(std::move(binary_form)) {}

  const std::string& binary_form() const noexcept { return binary_form_; }

 private:
  std::string binary_form_;
};

/// A random instance generator exhausted its resampling budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// A type signature could not be assigned to an ideal.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const noexcept { return message_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

}  // namespace pdquad
