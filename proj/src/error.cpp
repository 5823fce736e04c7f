#include "lpa/error.hpp"

namespace lpa {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::EmptyVertexSet: return "EmptyVertexSet";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::GraphTooLarge: return "GraphTooLarge";
    case ErrorCode::InvalidSubset: return "InvalidSubset";
    case ErrorCode::NotABreakingVertex: return "NotABreakingVertex";
    case ErrorCode::InvalidAdmissiblePair: return "InvalidAdmissiblePair";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::ExitlessCycleObstruction: return "ExitlessCycleObstruction";
    case ErrorCode::AllGeneratorsZero: return "AllGeneratorsZero";
    case ErrorCode::NotExitlessCycleBase: return "NotExitlessCycleBase";
    case ErrorCode::NotInCorner: return "NotInCorner";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorCode::GhostOnGroup: return "GhostOnGroup";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace lpa
