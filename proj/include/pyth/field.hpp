#pragma once

/**
 * @file field.hpp
 * @brief Exact coefficient fields: the rationals and prime fields F_p, p odd.
 *
 * A FieldSpec names the field; a FieldElement carries its spec along with a
 * canonical value (a GMP rational kept in lowest terms, or a residue in
 * [0, p)). Because every value is canonical, equality is representation
 * equality. Mixing elements of different fields throws FieldMismatch.
 */

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "pyth/error.hpp"

namespace pyth {

class FieldSpec {
public:
    enum class Kind { Rationals, PrimeField };

    /// Largest accepted modulus; residues are multiplied in 64 bits.
    static constexpr std::uint64_t max_modulus = 0xFFFFFFFFull;

    static FieldSpec rationals() noexcept { return FieldSpec(Kind::Rationals, 0); }

    /// Throws InvalidField unless p is an odd prime not exceeding max_modulus.
    static FieldSpec prime(std::uint64_t p);

    /// Accepts "q" or "fp:<p>".
    static FieldSpec parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
    bool is_prime_field() const noexcept { return kind_ == Kind::PrimeField; }
    /// 0 for the rationals.
    std::uint64_t modulus() const noexcept { return modulus_; }

    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(Kind kind, std::uint64_t modulus) noexcept : kind_(kind), modulus_(modulus) {}

    Kind kind_;
    std::uint64_t modulus_;
};

bool is_prime(std::uint64_t n) noexcept;

class FieldElement {
public:
    static FieldElement zero(FieldSpec spec);
    static FieldElement one(FieldSpec spec);
    static FieldElement from_int(FieldSpec spec, long value);
    /// Over F_p the denominator must be a unit mod p.
    static FieldElement from_rational(FieldSpec spec, const mpq_class& value);

    const FieldSpec& spec() const noexcept { return spec_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Residue in [0, p); only valid over a prime field.
    std::uint64_t residue() const;
    /// Canonical rational; only valid over Q.
    const mpq_class& rational() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    /// Throws DivisionByZero for zero.
    FieldElement inverse() const;
    /// The unique h with h + h = *this.
    FieldElement half() const;

    /// "n" or "n/d" over Q, the residue over F_p.
    std::string to_string() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);

    /// Total order used only for canonical sorting (residue order, or
    /// numeric order over Q); throws FieldMismatch across fields.
    friend std::strong_ordering compare(const FieldElement& a, const FieldElement& b);

private:
    using Value = std::variant<std::uint64_t, mpq_class>;

    FieldElement(FieldSpec spec, Value value) : spec_(spec), value_(std::move(value)) {}

    void require_same_field(const FieldElement& other) const;

    FieldSpec spec_;
    Value value_;
};

/// Operation-style entry point mirroring the four field operations.
enum class FieldOp { Add, Sub, Mul, Div };
FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op);

inline FieldElement invert(const FieldElement& a) { return a.inverse(); }
inline FieldElement halve(const FieldElement& a) { return a.half(); }

}  // namespace pyth
