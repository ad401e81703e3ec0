#pragma once

#include <stdexcept>
#include <string>

namespace umw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what) {}

  int line() const noexcept { return line_; }

 private:
  int line_ = 0;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An exact (exponential) routine was asked to run above its size limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class RateInfeasible : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ZeroNorm : public Error {
 public:
  using Error::Error;
};

}  // namespace umw
