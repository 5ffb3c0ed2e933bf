#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace galring {

enum class ErrorKind {
  Context,              // operands built over different variable tables / contexts
  DivisionByZero,
  DegenerateSubstitution,
  HigherOrderPole,
  InvalidDivisor,
  NotInvertible,
  NormalizationViolation,
  StabilizerInvariance,
  Invariance,
  Precondition,
  Parameter,
  Definition,           // unresolved generator name in a relation
  UnsupportedMode,
  Parse,
  Resource,
  Overflow,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace galring
