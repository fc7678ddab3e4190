#include <kcb/error.hh>

namespace kcb {

auto to_string(ErrorCode code) -> std::string_view
{
    switch (code) {
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::NoSolution: return "NoSolution";
        case ErrorCode::NotBiregular: return "NotBiregular";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::InvalidStep: return "InvalidStep";
        case ErrorCode::Inapplicable: return "Inapplicable";
        case ErrorCode::IsBiregularCase: return "IsBiregularCase";
        case ErrorCode::ShapeError: return "ShapeError";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::NoPerfectMatching: return "NoPerfectMatching";
        case ErrorCode::Unbalanced: return "Unbalanced";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string & what) :
    std::runtime_error(std::string(to_string(code)) + ": " + what),
    _code(code)
{
}

} // namespace kcb
