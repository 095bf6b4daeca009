#include "pyth/berggren.hpp"

namespace pyth {

namespace {

bool has_standard_shape(const Triple& q) {
    return q.x().degree() < q.y().degree() && q.y().degree() == q.z().degree() &&
           q.y().leading() == q.z().leading();
}

void require_descendable_shape(const Triple& q) {
    if (!has_standard_shape(q)) throw Error(Errc::NotDescendable, render(q) + " is not an SPT");
    if (q.x().is_zero()) throw Error(Errc::NotDescendable, "x = 0");
}

}  // namespace

DescentStep descent_step(const Triple& q) {
    require_descendable_shape(q);
    if (q.z().degree() == 2 * q.x().degree()) {
        throw Error(Errc::NotDescendable, "deg z = 2 deg x, this is the base case");
    }
    Poly f = euclid_divide(q.z(), q.x()).quotient;
    Triple next = mat_apply(mat_inverse_Mf(f), q);
    if (next.x().is_zero() || !has_standard_shape(next) || !(height(next) < height(q))) {
        throw Error(Errc::InvariantViolation, "descent from " + render(q) + " produced " + render(next));
    }
    return {std::move(f), std::move(next)};
}

BaseCase base_case_extract(const Triple& q) {
    require_descendable_shape(q);
    if (q.z().degree() != 2 * q.x().degree()) {
        throw Error(Errc::NotDescendable, "deg z != 2 deg x, descend first");
    }
    const FieldSpec spec = q.spec();
    const Poly x2 = q.x() * q.x();
    // y = a x^2 + b with deg b < 2 deg x, so the quotient is the constant a.
    DivResult yd = euclid_divide(q.y(), x2);
    if (!yd.quotient.is_constant() || yd.quotient.is_zero()) {
        throw Error(Errc::InvariantViolation, "quotient of y by x^2 is not a nonzero constant");
    }
    const FieldElement a = yd.quotient.leading();
    const Poly& b = yd.remainder;
    const Poly beta = q.z() - x2.scaled(a);
    const Poly one = Poly::constant(FieldElement::one(spec));
    const FieldElement four_a = FieldElement::from_int(spec, 4) * a;
    if (!(b == -beta) || !(one + b.scaled(four_a)).is_zero()) {
        throw Error(Errc::InvariantViolation, render(q) + " fails b = -beta, 1 + 4ab = 0");
    }
    BaseCase out{four_a.inverse(), q.x().scaled(FieldElement::from_int(spec, 2) * a)};
    if (!(scale(make_S(out.f).triple, out.c) == q)) {
        throw Error(Errc::InvariantViolation, render(q) + " is not c * S_f");
    }
    return out;
}

BerggrenWord decompose(const Triple& q) {
    const Classification cls = classify(q);
    if (cls != Classification::SPT) {
        throw Error(Errc::NotSPT, render(q) + " is " + std::string(classification_name(cls)));
    }
    if (q.x().is_zero()) return {q.y().leading(), {}, std::nullopt};

    std::vector<Poly> word;
    Triple current = q;
    while (current.z().degree() != 2 * current.x().degree()) {
        DescentStep step = descent_step(current);
        word.push_back(std::move(step.f));
        current = std::move(step.next);
    }
    BaseCase base = base_case_extract(current);
    BerggrenWord out{std::move(base.c), std::move(word), std::move(base.f)};
    if (!(reconstruct(out, q.spec()) == q)) {
        throw Error(Errc::InvariantViolation, "decomposition of " + render(q) + " does not reconstruct it");
    }
    return out;
}

Triple reconstruct(const BerggrenWord& w, FieldSpec spec) {
    if (!(w.c.spec() == spec)) throw Error(Errc::MalformedWord, "c is not in " + spec.to_string());
    if (w.c.is_zero()) throw Error(Errc::MalformedWord, "c = 0");
    const auto check = [&](const Poly& f, const char* what) {
        if (!(f.spec() == spec)) throw Error(Errc::MalformedWord, std::string(what) + " is not over " + spec.to_string());
        if (f.is_constant()) throw Error(Errc::MalformedWord, std::string(what) + " " + render(f) + " is constant");
    };
    for (const auto& f : w.word) check(f, "word entry");
    if (w.is_axis()) {
        if (!w.word.empty()) throw Error(Errc::MalformedWord, "AXIS words carry no matrices");
        const Poly c = Poly::constant(w.c);
        return Triple(Poly(spec), c, c);
    }
    check(*w.base, "base");
    Triple acc = make_S(*w.base).triple;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) acc = mat_apply(generator(MfGen{*it}, spec), acc);
    return scale(acc, w.c);
}

Normalization normalize_to_spt(const Triple& q) {
    const Classification cls = classify(q);
    const FieldSpec spec = q.spec();
    const FieldElement two = FieldElement::from_int(spec, 2);
    FieldElement f = FieldElement::zero(spec);
    switch (cls) {
        case Classification::SPT:
            throw Error(Errc::AlreadySPT, render(q));
        case Classification::NotPythagorean:
        case Classification::NotPrimitive:
            throw Error(Errc::NotSPT, render(q) + " is " + std::string(classification_name(cls)));
        case Classification::TypeI:
            break;
        case Classification::TypeII:
            f = q.x().leading() / (two * q.z().leading());
            break;
        case Classification::TypeIII:
            f = q.x().leading() / (two * (q.z().leading() - q.y().leading()));
            break;
        case Classification::TypeIV:
            f = -q.x().leading() / (two * q.y().leading());
            break;
    }
    Mat3 n = mat_inverse_Mf(Poly::constant(f));
    Triple spt = mat_apply(n, q);
    if (!is_spt(spt) || !(height(spt) == height(q))) {
        throw Error(Errc::InvariantViolation, "normalization of " + render(q) + " gave " + render(spt));
    }
    return {std::move(n), std::move(f), std::move(spt)};
}

}  // namespace pyth
