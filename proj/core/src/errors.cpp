#include "dforge/errors.hpp"

namespace dforge {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroIdeal: return "ZeroIdeal";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::NotAField: return "NotAField";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidAutomorphism: return "InvalidAutomorphism";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::BadConstantTerm: return "BadConstantTerm";
    case ErrorCode::RankZero: return "RankZero";
    case ErrorCode::NotRankTwo: return "NotRankTwo";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::CocycleViolation: return "CocycleViolation";
    case ErrorCode::NonCyclicGroup: return "NonCyclicGroup";
    case ErrorCode::NotIntertwining: return "NotIntertwining";
    case ErrorCode::Inseparable: return "Inseparable";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::StructureError: return "StructureError";
    case ErrorCode::DivisionInexact: return "DivisionInexact";
    case ErrorCode::ChainMismatch: return "ChainMismatch";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::NotScalarConjugate: return "NotScalarConjugate";
    case ErrorCode::MissingCertificate: return "MissingCertificate";
    case ErrorCode::NotTreeMetric: return "NotTreeMetric";
    case ErrorCode::NotGInvariant: return "NotGInvariant";
    case ErrorCode::AsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorCode::MissingIsogeny: return "MissingIsogeny";
    case ErrorCode::OrbitNotClosed: return "OrbitNotClosed";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::EvenCharacteristicUnsupported: return "EvenCharacteristicUnsupported";
    case ErrorCode::NotGStable: return "NotGStable";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Cancelled: return "Cancelled";
  }
  return "Unknown";
}

}  // namespace dforge
