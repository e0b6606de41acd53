#pragma once

#include <stdexcept>
#include <string>

namespace germs {

// Base for every error raised by the library. Mathematical verdicts
// (inconsistent family, infinite associated set, ...) are reported as data,
// never thrown.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

// Raised when an engine flavor cannot decide a question about its input
// (non-multigraded submodule in the monomial engine, unsupported prime, ...).
class UnsupportedFlavor : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Input that is well formed but mathematically contradictory: germs that
// disagree under specialization, a family that fails its conditions.
class Inconsistent : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column, const std::string& source = "")
      : Error((source.empty() ? "" : source + ":") + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        message_(msg),
        line_(line),
        column_(column),
        source_(source) {}

  const std::string& message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& source() const { return source_; }

 private:
  std::string message_;
  int line_;
  int column_;
  std::string source_;
};

}  // namespace germs
