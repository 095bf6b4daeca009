#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pyth {

enum class Errc {
    InvalidField,
    DivisionByZero,
    FieldMismatch,
    ZeroPolynomial,
    ZeroIdeal,
    ZeroTriple,
    ParseError,
    IsotropicVector,
    NonUnitNorm,
    NotDescendable,
    InvariantViolation,
    NotSPT,
    NotPrimitive,
    AlreadySPT,
    MalformedWord,
    UnboundedEnumeration,
    NotOrthogonal,
    NotStabilizer,
    SearchTooLarge,
};

std::string_view errc_name(Errc code) noexcept;

// Every library failure is reported through this type; `code()` identifies
// the failed contract and `what()` carries "<Name>: <detail>".
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& detail);

    /// Zero-based offset into the input where parsing failed.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace pyth
