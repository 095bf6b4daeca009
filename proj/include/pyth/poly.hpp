#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over a FieldSpec.
 *
 * Coefficients are stored in ascending degree with no trailing zero, so the
 * zero polynomial is the empty sequence and two polynomials are equal iff
 * their coefficient vectors are. The indeterminate is always written `t`.
 */

#include <compare>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pyth/field.hpp"

namespace pyth {

/// Polynomial degree with deg(0) = NEG_INF ordered below every integer.
class Degree {
public:
    constexpr Degree() noexcept = default;
    constexpr explicit Degree(int value) noexcept : value_(value) {}

    static constexpr Degree neg_inf() noexcept { return Degree(); }

    constexpr bool is_neg_inf() const noexcept { return value_ == sentinel; }
    /// Meaningless for NEG_INF; check is_neg_inf first.
    constexpr int value() const noexcept { return value_; }

    /// NEG_INF absorbs addition.
    friend constexpr Degree operator+(Degree a, Degree b) noexcept {
        return (a.is_neg_inf() || b.is_neg_inf()) ? neg_inf() : Degree(a.value_ + b.value_);
    }
    friend constexpr Degree operator*(int k, Degree d) noexcept {
        return d.is_neg_inf() ? neg_inf() : Degree(k * d.value_);
    }

    friend constexpr bool operator==(Degree, Degree) noexcept = default;
    friend constexpr auto operator<=>(Degree, Degree) noexcept = default;
    friend constexpr bool operator==(Degree a, int b) noexcept { return a.value_ == b; }
    friend constexpr auto operator<=>(Degree a, int b) noexcept { return a.value_ <=> b; }

    std::string to_string() const { return is_neg_inf() ? "-inf" : std::to_string(value_); }

private:
    static constexpr int sentinel = std::numeric_limits<int>::min();
    int value_ = sentinel;
};

inline constexpr Degree NEG_INF = Degree::neg_inf();

class Poly {
public:
    /// The zero polynomial of `spec`.
    explicit Poly(FieldSpec spec) : spec_(spec) {}
    /// Trailing zeros are stripped; all coefficients must belong to `spec`.
    Poly(FieldSpec spec, std::vector<FieldElement> coeffs);

    static Poly constant(const FieldElement& c);
    static Poly from_ints(FieldSpec spec, std::initializer_list<long> ascending);
    /// c * t^k.
    static Poly monomial(const FieldElement& c, int k);
    static Poly variable(FieldSpec spec);

    const FieldSpec& spec() const noexcept { return spec_; }
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    /// True for elements of K, including zero.
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    Degree degree() const noexcept {
        return coeffs_.empty() ? NEG_INF : Degree(static_cast<int>(coeffs_.size()) - 1);
    }
    /// Throws ZeroPolynomial for 0.
    const FieldElement& leading() const;
    /// Coefficient of t^k (zero beyond the degree).
    FieldElement coeff(std::size_t k) const;

    Poly monic() const;
    Poly scaled(const FieldElement& c) const;
    FieldElement evaluate(const FieldElement& point) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const FieldElement& c, const Poly& a) { return a.scaled(c); }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void require_same_field(const Poly& other) const;
    void trim();

    FieldSpec spec_;
    std::vector<FieldElement> coeffs_;
};

enum class PolyOp { Add, Sub, Mul };
Poly poly_arith(const Poly& a, const Poly& b, PolyOp op);

inline Degree degree(const Poly& a) noexcept { return a.degree(); }
inline const FieldElement& leading(const Poly& a) { return a.leading(); }

struct DivResult {
    Poly quotient;
    Poly remainder;
};

/// z = quotient * x + remainder with deg remainder < deg x.
/// Throws DivisionByZero when x = 0.
DivResult euclid_divide(const Poly& z, const Poly& x);

/// Monic generator of the ideal (ps...). Throws ZeroIdeal if every input is
/// zero (or the list is empty).
Poly gcd_many(std::span<const Poly> ps);
Poly gcd(const Poly& a, const Poly& b);

struct ExtGcd {
    Poly gcd;  ///< monic
    Poly s;
    Poly t;    ///< s*a + t*b = gcd
};
/// Extended Euclid on a pair, not both zero.
ExtGcd ext_gcd(const Poly& a, const Poly& b);

/// g(f(t)).
Poly compose(const Poly& g, const Poly& f);

/// Parses a signed sum of terms `c`, `c*t`, `t^k`, `c*t^k` with integer or
/// `n/d` coefficients (fractions only over Q). Whitespace is ignored.
Poly parse_poly(std::string_view text, FieldSpec spec);
/// Parses a single field element through the polynomial grammar; the result
/// must be constant.
FieldElement parse_element(std::string_view text, FieldSpec spec);

/// Descending-degree rendering with no spaces, e.g. "4*t^3-2*t"; "0" for zero.
std::string render(const Poly& a);

}  // namespace pyth
