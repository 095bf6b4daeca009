#include "pyth/orthogroup.hpp"

namespace pyth {

namespace {

// Route from (0, 1, 1) to q:  q = [M_f] M_{f_1} ... M_{f_k} [M_{g/2}] T_c (0, 1, 1).
struct OrbitPlan {
    std::optional<FieldElement> normalizer;  // constant f with M_f^{-1} q standard
    std::vector<Poly> word;
    std::optional<Poly> half_base;
    FieldElement c;
};

OrbitPlan plan_orbit(const Triple& q) {
    const Classification cls = classify(q);
    if (cls == Classification::NotPythagorean) throw Error(Errc::NotSPT, render(q) + " is not Pythagorean");
    if (cls == Classification::NotPrimitive) throw Error(Errc::NotPrimitive, render(q));

    std::optional<FieldElement> normalizer;
    std::optional<Triple> standard;
    if (cls == Classification::SPT) {
        standard = q;
    } else {
        Normalization n = normalize_to_spt(q);
        normalizer = n.f;
        standard = std::move(n.spt);
    }
    BerggrenWord w = decompose(*standard);
    std::optional<Poly> half_base;
    if (w.base) half_base = w.base->scaled(FieldElement::one(q.spec()).half());
    return {std::move(normalizer), std::move(w.word), std::move(half_base), std::move(w.c)};
}

Mat3 plan_matrix(const OrbitPlan& plan, FieldSpec spec) {
    Mat3 acc = Mat3::identity(spec);
    if (plan.normalizer) acc = acc * generator(MfGen{Poly::constant(*plan.normalizer)}, spec);
    for (const auto& f : plan.word) acc = acc * generator(MfGen{f}, spec);
    if (plan.half_base) acc = acc * generator(MfGen{*plan.half_base}, spec);
    if (!plan.c.is_one()) acc = acc * generator(TcGen{plan.c}, spec);
    return acc;
}

// M_h = R_h U_1 = R_h P_xy R_0 P_xy.
void append_descent(GeneratorWord& out, const Poly& h) {
    out.push_back(RfGen{h});
    out.push_back(PxyGen{});
    out.push_back(RfGen{Poly(h.spec())});
    out.push_back(PxyGen{});
}

}  // namespace

Triple axis_triple(FieldSpec spec) {
    const Poly one = Poly::constant(FieldElement::one(spec));
    return Triple(Poly(spec), one, one);
}

Mat3 StabilizerForm::expand() const {
    const FieldSpec spec = a2.spec();
    Mat3 r = generator(RfGen{-a2.scaled(FieldElement::one(spec).half())}, spec);
    if (a1.is_one()) r = r * generator(RfGen{Poly(spec)}, spec);
    return r;
}

GeneratorWord StabilizerForm::generators() const {
    const FieldSpec spec = a2.spec();
    GeneratorWord out{RfGen{-a2.scaled(FieldElement::one(spec).half())}};
    if (a1.is_one()) out.push_back(RfGen{Poly(spec)});
    return out;
}

StabilizerForm stabilizer_factor(const Mat3& r) {
    if (!is_orthogonal(r)) throw Error(Errc::NotOrthogonal, "stabilizer candidate is not orthogonal");
    const FieldSpec spec = r.spec();
    const Triple axis = axis_triple(spec);
    if (!(mat_apply(r, axis) == axis)) throw Error(Errc::NotStabilizer, "matrix moves (0, 1, 1)");

    const Poly& a1 = r(0, 0);
    const Poly& a2 = r(0, 1);
    const Poly one = Poly::constant(FieldElement::one(spec));
    if (!(a1 == one || a1 == -one)) throw Error(Errc::NotStabilizer, "entry (1,1) is " + render(a1) + ", not +-1");
    const Poly half_sq = (a2 * a2).scaled(FieldElement::one(spec).half());
    const Poly a1a2 = a1 * a2;
    const Mat3 closed(spec, {a1, a2, -a2,
                             -a1a2, one - half_sq, half_sq,
                             -a1a2, -half_sq, one + half_sq});
    if (!(closed == r)) throw Error(Errc::NotStabilizer, "matrix departs from the stabilizer closed form");
    return {a1.leading(), a2};
}

GeneratorWord factor(const Mat3& a) {
    if (!is_orthogonal(a)) throw Error(Errc::NotOrthogonal, "A^T J A != J");
    const FieldSpec spec = a.spec();
    const OrbitPlan plan = plan_orbit(mat_apply(a, axis_triple(spec)));
    const Mat3 residual = orthogonal_inverse(plan_matrix(plan, spec)) * a;

    GeneratorWord out;
    if (plan.normalizer) append_descent(out, Poly::constant(*plan.normalizer));
    for (const auto& f : plan.word) append_descent(out, f);
    if (plan.half_base) append_descent(out, *plan.half_base);
    if (!plan.c.is_one()) out.push_back(TcGen{plan.c});
    if (!residual.is_identity()) {
        for (auto& g : stabilizer_factor(residual).generators()) out.push_back(std::move(g));
    }
    if (!(word_product(out, spec) == a)) throw Error(Errc::InvariantViolation, "factorization does not reproduce A");
    return out;
}

Mat3 orbit_map(const Triple& q) {
    Mat3 a = plan_matrix(plan_orbit(q), q.spec());
    if (!(mat_apply(a, axis_triple(q.spec())) == q)) {
        throw Error(Errc::InvariantViolation, "orbit map misses " + render(q));
    }
    return a;
}

}  // namespace pyth
