#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line` is 1-based (0 when the input is a single
/// expression); `position` is a 0-based column within the line.
class SyntaxError : public Error {
public:
  SyntaxError(const std::string &message, std::size_t position, std::size_t line = 0)
      : Error(message), position_(position), line_(line) {}

  std::size_t position() const noexcept { return position_; }
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t position_;
  std::size_t line_;
};

class UnknownName : public SyntaxError {
public:
  UnknownName(const std::string &identifier, std::size_t position, std::size_t line = 0)
      : SyntaxError("unknown name '" + identifier + "'", position, line), identifier_(identifier) {}

  const std::string &identifier() const noexcept { return identifier_; }

private:
  std::string identifier_;
};

class InvalidSignature : public Error {
  using Error::Error;
};

/// A model violates the structural invariants of an interpretation.
class InvalidModel : public Error {
public:
  explicit InvalidModel(const std::string &message, std::size_t line = 0)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

class IllFormedSystem : public Error {
  using Error::Error;
};

class WrongGciKind : public Error {
  using Error::Error;
};

class NonMonotoneBody : public Error {
  using Error::Error;
};

class SignatureMismatch : public Error {
  using Error::Error;
};

class EmptyFamily : public Error {
  using Error::Error;
};

class InvalidPartition : public Error {
  using Error::Error;
};

class NotABisimulationPartition : public Error {
  using Error::Error;
};

class NotMorphism : public Error {
  using Error::Error;
};

class DomainTooLarge : public Error {
  using Error::Error;
};

class NotSeparable : public Error {
  using Error::Error;
};

class UnsupportedAxiom : public Error {
  using Error::Error;
};

class SearchBudgetExceeded : public Error {
  using Error::Error;
};

} // namespace alc
