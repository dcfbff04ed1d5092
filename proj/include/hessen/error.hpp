#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hessen {

enum class ErrorCode {
    InvalidOrder,
    WrongEntryCount,
    OrderTooLargeForOracle,
    OrderTooLargeForClosedForm,
    OrderTooLargeForExpansion,
    IndexOutOfRange,
    NotInRangeSet,
    InvalidSep,
    IrregularOrder,
    WrongShape,
    WrongInitLength,
    DivisionByZero,
    InvalidParams,
    ParseError,
    InvariantViolated,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception type thrown by every library operation.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

    /// True for the three cap guards (oracle, closed form, symbolic expansion).
    [[nodiscard]] bool is_cap_violation() const noexcept {
        return code_ == ErrorCode::OrderTooLargeForOracle
            || code_ == ErrorCode::OrderTooLargeForClosedForm
            || code_ == ErrorCode::OrderTooLargeForExpansion;
    }

private:
    ErrorCode code_;
};

} // namespace hessen
