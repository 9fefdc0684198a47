#pragma once

#include <stdexcept>
#include <string>

namespace cdirac {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedType : public Error {
 public:
  using Error::Error;
};
class NotClosed : public Error {
 public:
  using Error::Error;
};
class NotNegationClosed : public Error {
 public:
  using Error::Error;
};
class NotHermitian : public Error {
 public:
  using Error::Error;
};
class OutsideWindow : public Error {
 public:
  using Error::Error;
};
class WindowTooShallow : public Error {
 public:
  using Error::Error;
};
class LiftFailure : public Error {
 public:
  using Error::Error;
};
class ParseError : public Error {
 public:
  using Error::Error;
};
// An internal invariant failed. Carries the invariant name for the CLI.
class CheckFailure : public Error {
 public:
  CheckFailure(std::string invariant, const std::string& detail)
      : Error(invariant + ": " + detail), invariant_(std::move(invariant)) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

}  // namespace cdirac
