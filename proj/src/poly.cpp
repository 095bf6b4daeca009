#include "pyth/poly.hpp"

#include <algorithm>
#include <optional>

namespace pyth {

Poly::Poly(FieldSpec spec, std::vector<FieldElement> coeffs) : spec_(spec), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
        if (!(c.spec() == spec_)) {
            throw Error(Errc::FieldMismatch, "coefficient from " + c.spec().to_string() +
                                                 " in polynomial over " + spec_.to_string());
        }
    }
    trim();
}

Poly Poly::constant(const FieldElement& c) { return Poly(c.spec(), {c}); }

Poly Poly::from_ints(FieldSpec spec, std::initializer_list<long> ascending) {
    std::vector<FieldElement> cs;
    cs.reserve(ascending.size());
    for (long v : ascending) cs.push_back(FieldElement::from_int(spec, v));
    return Poly(spec, std::move(cs));
}

Poly Poly::monomial(const FieldElement& c, int k) {
    std::vector<FieldElement> cs(static_cast<std::size_t>(k) + 1, FieldElement::zero(c.spec()));
    cs.back() = c;
    return Poly(c.spec(), std::move(cs));
}

Poly Poly::variable(FieldSpec spec) { return monomial(FieldElement::one(spec), 1); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::require_same_field(const Poly& other) const {
    if (!(spec_ == other.spec_)) {
        throw Error(Errc::FieldMismatch, spec_.to_string() + " vs " + other.spec_.to_string());
    }
}

const FieldElement& Poly::leading() const {
    if (coeffs_.empty()) throw Error(Errc::ZeroPolynomial, "leading coefficient of 0");
    return coeffs_.back();
}

FieldElement Poly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : FieldElement::zero(spec_);
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

Poly Poly::scaled(const FieldElement& c) const {
    if (!(c.spec() == spec_)) throw Error(Errc::FieldMismatch, "scalar from another field");
    if (c.is_zero()) return Poly(spec_);
    Poly out = *this;
    for (auto& a : out.coeffs_) a *= c;
    return out;
}

FieldElement Poly::evaluate(const FieldElement& point) const {
    FieldElement acc = FieldElement::zero(spec_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& a : out.coeffs_) a = -a;
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    require_same_field(rhs);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), FieldElement::zero(spec_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    require_same_field(rhs);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), FieldElement::zero(spec_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.require_same_field(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.spec_);
    std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElement::zero(a.spec_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(a.spec_, std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly poly_arith(const Poly& a, const Poly& b, PolyOp op) {
    switch (op) {
        case PolyOp::Add: return a + b;
        case PolyOp::Sub: return a - b;
        case PolyOp::Mul: return a * b;
    }
    throw Error(Errc::InvariantViolation, "unknown polynomial operation");
}

DivResult euclid_divide(const Poly& z, const Poly& x) {
    if (!(z.spec() == x.spec())) throw Error(Errc::FieldMismatch, "euclid_divide across fields");
    if (x.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero polynomial");
    const FieldSpec spec = z.spec();
    const int dx = x.degree().value();
    if (z.degree() < x.degree()) return {Poly(spec), z};

    std::vector<FieldElement> rem = z.coeffs();
    std::vector<FieldElement> quot(rem.size() - static_cast<std::size_t>(dx), FieldElement::zero(spec));
    const FieldElement lead_inv = x.leading().inverse();
    const auto& xc = x.coeffs();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const FieldElement q = rem[k + static_cast<std::size_t>(dx)] * lead_inv;
        quot[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j < xc.size(); ++j) rem[k + j] -= q * xc[j];
    }
    rem.resize(static_cast<std::size_t>(dx), FieldElement::zero(spec));
    return {Poly(spec, std::move(quot)), Poly(spec, std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
    if (!(a.spec() == b.spec())) throw Error(Errc::FieldMismatch, "gcd across fields");
    if (a.is_zero() && b.is_zero()) throw Error(Errc::ZeroIdeal, "gcd of zero polynomials");
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r2 = euclid_divide(r0, r1).remainder;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.monic();
}

Poly gcd_many(std::span<const Poly> ps) {
    std::optional<Poly> acc;
    for (const auto& p : ps) {
        if (p.is_zero()) continue;
        acc = acc ? gcd(*acc, p) : p.monic();
        if (acc->is_one()) break;
    }
    if (!acc) throw Error(Errc::ZeroIdeal, "gcd of an all-zero list");
    return *acc;
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
    if (!(a.spec() == b.spec())) throw Error(Errc::FieldMismatch, "ext_gcd across fields");
    if (a.is_zero() && b.is_zero()) throw Error(Errc::ZeroIdeal, "gcd of zero polynomials");
    const FieldSpec spec = a.spec();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(FieldElement::one(spec)), s1(spec);
    Poly t0(spec), t1 = Poly::constant(FieldElement::one(spec));
    while (!r1.is_zero()) {
        DivResult qr = euclid_divide(r0, r1);
        Poly s2 = s0 - qr.quotient * s1;
        Poly t2 = t0 - qr.quotient * t1;
        r0 = std::move(r1);
        r1 = std::move(qr.remainder);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const FieldElement inv = r0.leading().inverse();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Poly compose(const Poly& g, const Poly& f) {
    if (!(g.spec() == f.spec())) throw Error(Errc::FieldMismatch, "compose across fields");
    Poly acc(g.spec());
    const auto& gc = g.coeffs();
    for (auto it = gc.rbegin(); it != gc.rend(); ++it) acc = acc * f + Poly::constant(*it);
    return acc;
}

}  // namespace pyth
