#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kmrank {

enum class ErrorCode {
    InvalidPartition,
    NoSuchDecomposition,
    InvalidDecomposition,
    InvalidSequence,
    InsertionUnderflow,
    EmptyPartition,
    RankTooLarge,
    RankTooSmall,
    ZeroWidthRectangle,
    NotInImage,
    UnknownIdentity,
    UnsupportedParameters,
    ImpracticalOrder,
    ArithmeticOverflow,
    InternalInvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

// Internal consistency checks. A violation is a bug in this library, never
// a property of the caller's input.
inline void ensure(bool condition, const char* what) {
    if (!condition) fail(ErrorCode::InternalInvariantViolation, what);
}

}  // namespace kmrank
