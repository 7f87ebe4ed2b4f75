#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace frs {

class Word;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (foreign letters, bad files).
class InputError : public Error {
 public:
  explicit InputError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line == 0 ? what
                        : "line " + std::to_string(line) + ", column " + std::to_string(column) +
                              ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A construction was invoked on input violating its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A reduction exceeded its step cap or revisited a word; carries the partial trace.
class NonTerminationError : public Error {
 public:
  NonTerminationError(const std::string& what, std::vector<Word> trace);
  const std::vector<Word>& trace() const { return trace_; }

 private:
  std::vector<Word> trace_;
};

/// A check that the constructions guarantee has failed: an implementation bug signal.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace frs
