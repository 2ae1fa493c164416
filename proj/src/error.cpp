#include "kleene/error.hpp"

namespace kleene {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::NotInvolutive: return "NotInvolutive";
    case ErrorCode::NotAntitone: return "NotAntitone";
    case ErrorCode::NotBounded: return "NotBounded";
    case ErrorCode::NoUniqueTop: return "NoUniqueTop";
    case ErrorCode::NoUniqueBottom: return "NoUniqueBottom";
    case ErrorCode::NotOrderPreserving: return "NotOrderPreserving";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::NotOrtho: return "NotOrtho";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotChain: return "NotChain";
    case ErrorCode::GapConditionFailed: return "GapConditionFailed";
    case ErrorCode::NotKleene: return "NotKleene";
    case ErrorCode::EvenCardinality: return "EvenCardinality";
    case ErrorCode::NoFixedPoint: return "NoFixedPoint";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace kleene
