#include "pyth/triple.hpp"

#include <array>
#include <algorithm>

namespace pyth {

Triple::Triple(Poly x, Poly y, Poly z) : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
    if (!(x_.spec() == y_.spec()) || !(x_.spec() == z_.spec())) {
        throw Error(Errc::FieldMismatch, "triple components over different fields");
    }
    if (x_.is_zero() && y_.is_zero() && z_.is_zero()) throw Error(Errc::ZeroTriple, "(0, 0, 0)");
}

std::string_view classification_name(Classification c) noexcept {
    switch (c) {
        case Classification::SPT: return "SPT";
        case Classification::TypeI: return "TypeI";
        case Classification::TypeII: return "TypeII";
        case Classification::TypeIII: return "TypeIII";
        case Classification::TypeIV: return "TypeIV";
        case Classification::NotPythagorean: return "NotPythagorean";
        case Classification::NotPrimitive: return "NotPrimitive";
    }
    return "Unknown";
}

bool is_pythagorean(const Triple& q) {
    return (q.x() * q.x() + q.y() * q.y() - q.z() * q.z()).is_zero();
}

bool is_primitive(const Triple& q) {
    const std::array<Poly, 3> parts{q.x(), q.y(), q.z()};
    return gcd_many(parts).is_one();
}

Degree height(const Triple& q) {
    return std::max({q.x().degree(), q.y().degree(), q.z().degree()});
}

Classification classify(const Triple& q) {
    if (!is_pythagorean(q)) return Classification::NotPythagorean;
    if (!is_primitive(q)) return Classification::NotPrimitive;

    const Degree dx = q.x().degree(), dy = q.y().degree(), dz = q.z().degree();
    if (dx < dy && dy == dz) {
        if (q.y().leading() == q.z().leading()) return Classification::SPT;
        if (q.y().leading() == -q.z().leading()) return Classification::TypeI;
    } else if (dy < dx && dx == dz) {
        return Classification::TypeII;
    } else if (dx == dy && dy == dz) {
        return Classification::TypeIII;
    } else if (dz < dx && dx == dy) {
        // Only possible when -1 is a square: l(x)^2 + l(y)^2 = 0.
        const FieldElement& lx = q.x().leading();
        const FieldElement& ly = q.y().leading();
        if ((lx * lx + ly * ly).is_zero()) return Classification::TypeIV;
    }
    throw Error(Errc::InvariantViolation, "Pythagorean triple " + render(q) + " fits no type");
}

ParametrizedTriple make_S(const Poly& f) {
    const FieldSpec spec = f.spec();
    const Poly one = Poly::constant(FieldElement::one(spec));
    const Poly f2 = f * f;
    return {Triple(f.scaled(FieldElement::from_int(spec, 2)), f2 - one, f2 + one), !f.is_constant()};
}

Triple scale(const Triple& q, const FieldElement& c) {
    if (c.is_zero()) throw Error(Errc::DivisionByZero, "scaling a triple by zero");
    return Triple(q.x().scaled(c), q.y().scaled(c), q.z().scaled(c));
}

GcdSplit divide_out_gcd(const Triple& q) {
    const std::array<Poly, 3> parts{q.x(), q.y(), q.z()};
    Poly g = gcd_many(parts);
    if (g.is_one()) return {q, g};
    return {Triple(euclid_divide(q.x(), g).quotient, euclid_divide(q.y(), g).quotient,
                   euclid_divide(q.z(), g).quotient),
            g};
}

std::string render(const Triple& q) {
    return "(" + render(q.x()) + ", " + render(q.y()) + ", " + render(q.z()) + ")";
}

}  // namespace pyth
