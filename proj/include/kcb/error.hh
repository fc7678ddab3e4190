#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kcb {

enum class ErrorCode {
    InvalidParams,
    NoSolution,
    NotBiregular,
    OutOfRange,
    InvalidStep,
    Inapplicable,
    IsBiregularCase,
    ShapeError,
    BudgetExceeded,
    NoPerfectMatching,
    Unbalanced,
    Overflow,
    ParseError,
};

auto to_string(ErrorCode code) -> std::string_view;

/// The single exception type thrown by the library. The code says which
/// contract was violated; the message carries the offending values.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string & what);

    [[nodiscard]] auto code() const noexcept -> ErrorCode { return _code; }

private:
    ErrorCode _code;
};

} // namespace kcb
