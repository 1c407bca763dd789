#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace inflmatch {

// Numeric values are shared with the C API status codes and the CLI exit codes.
enum class ErrorCode : int {
    kInvalidArgument = 1,
    kIoError = 2,
    kMalformedFile = 3,
    kScoreLengthMismatch = 4,
    kScoreOutOfRange = 5,
    kMissingProfileFile = 6,
    kUnknownTarget = 7,
    kDuplicateUsername = 8,
    kEmptyCorpus = 9,
    kDimensionMismatch = 10,
    kTargetOutOfRange = 11,
    kSingletonSet = 12,
    kAsymmetricInput = 13,
    kNonzeroDiagonal = 14,
    kUnknownCategory = 15,
    kOverlappingPools = 16,
    kValidationFailed = 17,
    kInternal = 18,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace inflmatch
