#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hp {

enum class ErrorKind {
  DivisionByZero,
  ShapeMismatch,
  NoSolution,
  NotInvertible,
  NotInIdeal,
  NotCocommutative,
  NotModuleAlgebra,
  NotComoduleCoalgebra,
  PairingLawViolation,
  NotCentralIdempotent,
  GlobalLawViolation,
  ActionLawViolation,
  NotSmashShape,
  CocycleNotNormalized,
  NormalizationFailure,
  ClosureFailure,
  LawViolation,
  NotSymmetric,
  ImageNotInCoinvariants,
  NotAlgebraMap,
  NotALinear,
  NotColinear,
  InvalidGroup,
  PreconditionViolation,
  Config,
  Parse,
};

std::string_view error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hp
