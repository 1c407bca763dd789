#include "inflmatch/error.hpp"

namespace inflmatch {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::kInvalidArgument: return "InvalidArgument";
        case ErrorCode::kIoError: return "IoError";
        case ErrorCode::kMalformedFile: return "MalformedFile";
        case ErrorCode::kScoreLengthMismatch: return "ScoreLengthMismatch";
        case ErrorCode::kScoreOutOfRange: return "ScoreOutOfRange";
        case ErrorCode::kMissingProfileFile: return "MissingProfileFile";
        case ErrorCode::kUnknownTarget: return "UnknownTarget";
        case ErrorCode::kDuplicateUsername: return "DuplicateUsername";
        case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
        case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
        case ErrorCode::kTargetOutOfRange: return "TargetOutOfRange";
        case ErrorCode::kSingletonSet: return "SingletonSet";
        case ErrorCode::kAsymmetricInput: return "AsymmetricInput";
        case ErrorCode::kNonzeroDiagonal: return "NonzeroDiagonal";
        case ErrorCode::kUnknownCategory: return "UnknownCategory";
        case ErrorCode::kOverlappingPools: return "OverlappingPools";
        case ErrorCode::kValidationFailed: return "ValidationFailed";
        case ErrorCode::kInternal: return "Internal";
    }
    return "Unknown";
}

}  // namespace inflmatch
