#pragma once

#include <string>
#include <string_view>

#include "pyth/poly.hpp"

namespace pyth {

/// A non-zero triple (x, y, z) of polynomials over one field.
class Triple {
public:
    /// Throws FieldMismatch for mixed fields and ZeroTriple for (0, 0, 0).
    Triple(Poly x, Poly y, Poly z);

    const Poly& x() const noexcept { return x_; }
    const Poly& y() const noexcept { return y_; }
    const Poly& z() const noexcept { return z_; }
    const FieldSpec& spec() const noexcept { return x_.spec(); }

    friend bool operator==(const Triple&, const Triple&) = default;

private:
    Poly x_, y_, z_;
};

enum class Classification { SPT, TypeI, TypeII, TypeIII, TypeIV, NotPythagorean, NotPrimitive };

std::string_view classification_name(Classification c) noexcept;

bool is_pythagorean(const Triple& q);
bool is_primitive(const Triple& q);
/// max of the three degrees.
Degree height(const Triple& q);
/// Priority: Pythagorean, primitive, SPT, then the four non-standard shapes.
Classification classify(const Triple& q);

inline bool is_spt(const Triple& q) { return classify(q) == Classification::SPT; }

struct ParametrizedTriple {
    Triple triple;
    /// False when f is constant, in which case the triple is not an SPT.
    bool standard;
};

/// (2f, f^2 - 1, f^2 + 1).
ParametrizedTriple make_S(const Poly& f);

/// Componentwise c*q; throws DivisionByZero for c = 0.
Triple scale(const Triple& q, const FieldElement& c);

struct GcdSplit {
    Triple primitive;
    Poly gcd;  ///< monic
};
GcdSplit divide_out_gcd(const Triple& q);

/// "(x, y, z)" using the polynomial text grammar.
std::string render(const Triple& q);

}  // namespace pyth
