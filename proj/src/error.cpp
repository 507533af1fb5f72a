#include "hopfpartial/error.hpp"

namespace hp {

std::string_view error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotInIdeal: return "NotInIdeal";
    case ErrorKind::NotCocommutative: return "NotCocommutative";
    case ErrorKind::NotModuleAlgebra: return "NotModuleAlgebra";
    case ErrorKind::NotComoduleCoalgebra: return "NotComoduleCoalgebra";
    case ErrorKind::PairingLawViolation: return "PairingLawViolation";
    case ErrorKind::NotCentralIdempotent: return "NotCentralIdempotent";
    case ErrorKind::GlobalLawViolation: return "GlobalLawViolation";
    case ErrorKind::ActionLawViolation: return "ActionLawViolation";
    case ErrorKind::NotSmashShape: return "NotSmashShape";
    case ErrorKind::CocycleNotNormalized: return "CocycleNotNormalized";
    case ErrorKind::NormalizationFailure: return "NormalizationFailure";
    case ErrorKind::ClosureFailure: return "ClosureFailure";
    case ErrorKind::LawViolation: return "LawViolation";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::ImageNotInCoinvariants: return "ImageNotInCoinvariants";
    case ErrorKind::NotAlgebraMap: return "NotAlgebraMap";
    case ErrorKind::NotALinear: return "NotALinear";
    case ErrorKind::NotColinear: return "NotColinear";
    case ErrorKind::InvalidGroup: return "InvalidGroup";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::Config: return "ConfigError";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace hp
