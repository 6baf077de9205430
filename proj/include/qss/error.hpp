// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qss {

/// Domain error codes. The CLI prints the code name on stderr and exits 1,
/// so every failure mode that can reach a user has a stable name here.
enum class ErrorCode {
    InvalidWidth,
    BadQubit,
    OverlappingOperands,
    NotReversible,
    NotClassical,
    WidthMismatch,
    QubitBudgetExceeded,
    UseMeasureOp,
    WidthOverflow,
    EmptyInstance,
    InvalidValue,
    TargetTooWide,
    InvalidMask,
    TargetExceedsMax,
    TooLargeForBruteForce,
    VerificationFailed,
    NoSolutions,
    InvalidBaseline,
    ParseError,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    const char* name() const noexcept { return error_name(code_); }

private:
    ErrorCode code_;
};

} // namespace qss
