#include "pyth/error.hpp"

namespace pyth {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidField: return "InvalidField";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::ZeroIdeal: return "ZeroIdeal";
        case Errc::ZeroTriple: return "ZeroTriple";
        case Errc::ParseError: return "ParseError";
        case Errc::IsotropicVector: return "IsotropicVector";
        case Errc::NonUnitNorm: return "NonUnitNorm";
        case Errc::NotDescendable: return "NotDescendable";
        case Errc::InvariantViolation: return "InvariantViolation";
        case Errc::NotSPT: return "NotSPT";
        case Errc::NotPrimitive: return "NotPrimitive";
        case Errc::AlreadySPT: return "AlreadySPT";
        case Errc::MalformedWord: return "MalformedWord";
        case Errc::UnboundedEnumeration: return "UnboundedEnumeration";
        case Errc::NotOrthogonal: return "NotOrthogonal";
        case Errc::NotStabilizer: return "NotStabilizer";
        case Errc::SearchTooLarge: return "SearchTooLarge";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

ParseError::ParseError(std::size_t position, const std::string& detail)
    : Error(Errc::ParseError, detail + " at position " + std::to_string(position)),
      position_(position) {}

}  // namespace pyth
