#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cdkit {

enum class ErrorCode {
    not_divisible,
    not_palindromic,
    invalid_vertex,
    invalid_facet,
    invalid_edge,
    empty_input,
    empty_complex,
    not_a_vertex,
    dimension_out_of_range,
    wrong_parity,
    not_a_sphere,
    too_small,
    bad_probability,
    parse_error,
    unknown_generator,
    cap_exceeded,
};

inline std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::not_divisible: return "NotDivisible";
    case ErrorCode::not_palindromic: return "NotPalindromic";
    case ErrorCode::invalid_vertex: return "InvalidVertex";
    case ErrorCode::invalid_facet: return "InvalidFacet";
    case ErrorCode::invalid_edge: return "InvalidEdge";
    case ErrorCode::empty_input: return "EmptyInput";
    case ErrorCode::empty_complex: return "EmptyComplex";
    case ErrorCode::not_a_vertex: return "NotAVertex";
    case ErrorCode::dimension_out_of_range: return "DimensionOutOfRange";
    case ErrorCode::wrong_parity: return "WrongParity";
    case ErrorCode::not_a_sphere: return "NotASphere";
    case ErrorCode::too_small: return "TooSmall";
    case ErrorCode::bad_probability: return "BadProbability";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::unknown_generator: return "UnknownGenerator";
    case ErrorCode::cap_exceeded: return "CapExceeded";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace cdkit
