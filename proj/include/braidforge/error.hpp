#pragma once

#include <stdexcept>
#include <string>

namespace braidforge {

enum class ErrorKind {
  InvalidPresentation,
  EnumerationLimit,
  NotASubgroup,
  DivisionByZero,
  NotNormalized,
  NotEven,
  NotQuadratic,
  NotIsotropic,
  NotAnisotropic,
  NotMetric,
  ClassificationBug,
  AssociativityFail,
  UnitFail,
  DualityFail,
  FrobeniusFail,
  NumericalFail,
  NotWeaklyIntegral,
  Unsupported,
  VerlindeFail,
  SymmetryFail,
  DualDimFail,
  ZeroDim,
  UnitTwistFail,
  NotCharacter,
  BadParameter,
  Degenerate,
  SchemaError,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

}  // namespace braidforge
