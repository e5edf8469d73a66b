#include "braidforge/error.hpp"

namespace braidforge {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidPresentation: return "InvalidPresentation";
    case ErrorKind::EnumerationLimit: return "EnumerationLimit";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotEven: return "NotEven";
    case ErrorKind::NotQuadratic: return "NotQuadratic";
    case ErrorKind::NotIsotropic: return "NotIsotropic";
    case ErrorKind::NotAnisotropic: return "NotAnisotropic";
    case ErrorKind::NotMetric: return "NotMetric";
    case ErrorKind::ClassificationBug: return "ClassificationBug";
    case ErrorKind::AssociativityFail: return "AssociativityFail";
    case ErrorKind::UnitFail: return "UnitFail";
    case ErrorKind::DualityFail: return "DualityFail";
    case ErrorKind::FrobeniusFail: return "FrobeniusFail";
    case ErrorKind::NumericalFail: return "NumericalFail";
    case ErrorKind::NotWeaklyIntegral: return "NotWeaklyIntegral";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::VerlindeFail: return "VerlindeFail";
    case ErrorKind::SymmetryFail: return "SymmetryFail";
    case ErrorKind::DualDimFail: return "DualDimFail";
    case ErrorKind::ZeroDim: return "ZeroDim";
    case ErrorKind::UnitTwistFail: return "UnitTwistFail";
    case ErrorKind::NotCharacter: return "NotCharacter";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

}  // namespace braidforge
