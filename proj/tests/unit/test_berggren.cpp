#include <random>
#include <set>

#include "doctest.h"
#include "pyth/berggren.hpp"

using namespace pyth;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F5 = FieldSpec::prime(5);

Poly P(const char* text, FieldSpec spec = Q) { return parse_poly(text, spec); }
Triple T(const char* x, const char* y, const char* z, FieldSpec spec = Q) { return Triple(P(x, spec), P(y, spec), P(z, spec)); }
FieldElement E(long v, FieldSpec spec = Q) { return FieldElement::from_int(spec, v); }

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::InvariantViolation;
}

Poly random_nonconstant(std::mt19937_64& rng, FieldSpec spec, int max_deg) {
    std::uniform_int_distribution<int> deg(1, max_deg);
    std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
    while (true) {
        std::vector<FieldElement> cs;
        const int d = deg(rng);
        for (int k = 0; k <= d; ++k) {
            cs.push_back(spec.is_rationals() ? FieldElement::from_rational(spec, mpq_class(num(rng), den(rng)))
                                             : FieldElement::from_int(spec, num(rng)));
        }
        Poly p(spec, std::move(cs));
        if (!p.is_constant()) return p;
    }
}

}  // namespace

TEST_CASE("descent_step and base_case_extract") {
    const Triple q = T("4*t^3-2*t", "4*t^4-5*t^2+1", "4*t^4-3*t^2+1");
    const DescentStep step = descent_step(q);
    CHECK(step.f == P("t"));
    CHECK(step.next == T("2*t", "t^2-1", "t^2+1"));
    CHECK(code_of([&] { descent_step(step.next); }) == Errc::NotDescendable);
    CHECK(code_of([&] { descent_step(T("0", "1", "1")); }) == Errc::NotDescendable);

    const BaseCase base = base_case_extract(T("6*t", "3*t^2-3", "3*t^2+3"));
    CHECK(base.c == E(3));
    CHECK(base.f == P("t"));
    const BaseCase f3 = base_case_extract(T("t", "t^2-1", "t^2+1", F3));
    CHECK(f3.c == E(1, F3));
    CHECK(f3.f == P("2*t", F3));
    CHECK(code_of([&] { base_case_extract(q); }) == Errc::NotDescendable);
}

TEST_CASE("decompose and reconstruct examples") {
    const Triple q = T("4*t^3-2*t", "4*t^4-5*t^2+1", "4*t^4-3*t^2+1");
    const BerggrenWord w = decompose(q);
    CHECK(w.c == E(1));
    CHECK(w.word == std::vector<Poly>{P("t")});
    CHECK(w.base == P("t"));
    CHECK(reconstruct(w, Q) == q);

    const BerggrenWord sq{E(1), {}, P("t^2")};
    CHECK(reconstruct(sq, Q) == T("2*t^2", "t^4-1", "t^4+1"));
    CHECK(render(reconstruct(sq, Q)) == "(2*t^2, t^4-1, t^4+1)");
    CHECK(decompose(T("2*t^2", "t^4-1", "t^4+1")) == sq);

    const BerggrenWord axis = decompose(T("0", "5", "5"));
    CHECK(axis.is_axis());
    CHECK(axis.c == E(5));
    CHECK(axis.word.empty());
    CHECK(reconstruct(axis, Q) == T("0", "5", "5"));

    CHECK(code_of([] { decompose(T("t^2-1", "2*t", "t^2+1")); }) == Errc::NotSPT);
    CHECK(code_of([] { decompose(T("t", "t", "t")); }) == Errc::NotSPT);
    CHECK(code_of([] { reconstruct(BerggrenWord{E(1), {P("3")}, P("t")}, Q); }) == Errc::MalformedWord);
    CHECK(code_of([] { reconstruct(BerggrenWord{E(0), {}, P("t")}, Q); }) == Errc::MalformedWord);
    CHECK(code_of([] { reconstruct(BerggrenWord{E(1), {P("t")}, std::nullopt}, Q); }) == Errc::MalformedWord);
    CHECK(code_of([] { reconstruct(BerggrenWord{E(1), {}, P("t", F3)}, Q); }) == Errc::MalformedWord);
}

TEST_CASE("normalize_to_spt per type") {
    const Normalization one = normalize_to_spt(T("2*t", "1-t^2", "t^2+1"));
    CHECK(one.f == E(0));
    CHECK(one.spt == T("-2*t", "t^2-1", "t^2+1"));
    CHECK(one.matrix == mat_inverse_Mf(Poly(Q)));

    const Normalization two = normalize_to_spt(T("t^2-1", "2*t", "t^2+1"));
    CHECK(two.f == FieldElement::from_rational(Q, mpq_class(1, 2)));
    CHECK(two.spt == T("2-2*t", "1/2*t^2-t-3/2", "1/2*t^2-t+5/2"));

    const Normalization three = normalize_to_spt(T("3", "4", "5"));
    CHECK(three.f == FieldElement::from_rational(Q, mpq_class(3, 2)));
    CHECK(is_spt(three.spt));
    CHECK(three.spt.x().is_zero());

    const Normalization four = normalize_to_spt(T("1", "2", "0", F5));
    CHECK(four.f == E(1, F5));
    CHECK(four.spt == T("0", "4", "4", F5));
    const Normalization four_t = normalize_to_spt(T("4*t^2+3*t", "3*t^2+t+1", "t+1", F5));
    CHECK(four_t.f == E(1, F5));
    CHECK(four_t.spt == T("2*t", "t^2-1", "t^2+1", F5));

    CHECK(code_of([] { normalize_to_spt(T("2*t", "t^2-1", "t^2+1")); }) == Errc::AlreadySPT);
    CHECK(code_of([] { normalize_to_spt(T("2*t^2", "t^3-t", "t^3+t")); }) == Errc::NotSPT);
}

TEST_CASE("enumerate_tree over F_3") {
    EnumerationOptions opts;
    opts.max_height = 2;
    const auto h2 = enumerate_tree(F3, opts);
    CHECK(h2.size() == 12);
    for (const auto& node : h2) {
        CHECK(node.height == 2);
        CHECK(!node.parent);
        CHECK(node.word.word.empty());
    }
    opts.max_height = 3;
    CHECK(enumerate_tree(F3, opts).size() == 12);
    opts.max_height = 1;
    CHECK(enumerate_tree(F3, opts).empty());

    // Words whose degrees sum to at most 2: 6 linear bases, 18 quadratic
    // bases, 6 * 6 linear M_f over a linear base; each times 2 scalars.
    opts.max_height = 4;
    opts.jobs = 3;
    const auto h4 = enumerate_tree(F3, opts);
    CHECK(h4.size() == 120);
    std::set<std::string> distinct;
    for (std::size_t i = 0; i < h4.size(); ++i) {
        const TreeNode& node = h4[i];
        distinct.insert(render(node.triple));
        CHECK(is_spt(node.triple));
        CHECK(reconstruct(node.word, F3) == node.triple);
        CHECK(height(node.triple) == node.height);
        if (node.parent) {
            const TreeNode& up = h4[*node.parent];
            CHECK(up.word.word.size() + 1 == node.word.word.size());
            CHECK(mat_apply(generator(MfGen{node.word.word.front()}, F3), up.triple) == node.triple);
        }
        if (i > 0) CHECK(h4[i - 1].height <= node.height);
    }
    CHECK(distinct.size() == h4.size());

    opts.jobs = 1;
    const auto serial = enumerate_tree(F3, opts);
    CHECK(serial.size() == h4.size());
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i].triple == h4[i].triple);
}

TEST_CASE("enumerate_tree over Q") {
    EnumerationOptions opts;
    CHECK(code_of([&] { enumerate_tree(Q, opts); }) == Errc::UnboundedEnumeration);
    opts.coefficients = std::vector<FieldElement>{E(0), E(1), E(-1)};
    opts.max_height = 2;
    // Linear f = a t + b with a in {1, -1}, b in {0, 1, -1}; c in {1, -1}.
    CHECK(enumerate_tree(Q, opts).size() == 12);
    const auto polys = polynomials_of_degree(Q, *opts.coefficients, 2);
    CHECK(polys.size() == 18);
}

TEST_CASE("round trip on random words") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> len(0, 3);
    std::uniform_int_distribution<long> cpick(1, 4);
    for (FieldSpec spec : {Q, F3, F5, FieldSpec::prime(65537)}) {
        for (int i = 0; i < 150; ++i) {
            BerggrenWord w{E(cpick(rng), spec), {}, random_nonconstant(rng, spec, 2)};
            if (w.c.is_zero()) w.c = E(1, spec);
            const int k = len(rng);
            for (int j = 0; j < k; ++j) w.word.push_back(random_nonconstant(rng, spec, 2));
            const Triple q = reconstruct(w, spec);
            REQUIRE(is_spt(q));
            REQUIRE(decompose(q) == w);
        }
    }
}

TEST_CASE("M_f sends the axis to S_{2f}") {
    std::mt19937_64 rng(31);
    const Triple axis = T("0", "1", "1");
    for (int i = 0; i < 100; ++i) {
        const Poly f = random_nonconstant(rng, Q, 3);
        const Triple image = mat_apply(generator(MfGen{f}, Q), axis);
        CHECK(image == make_S(E(2) * f).triple);
        CHECK(decompose(image) == BerggrenWord{E(1), {}, E(2) * f});
    }
}

TEST_CASE("normalization on random non-standard triples") {
    // M_h q for constant h != 0 turns an SPT into a non-standard triple that
    // must normalize back to an SPT of the same height.
    std::mt19937_64 rng(37);
    int nonstandard = 0;
    for (FieldSpec spec : {Q, F5, FieldSpec::prime(13)}) {
        for (int i = 0; i < 100; ++i) {
            const Triple spt = reconstruct(BerggrenWord{E(1, spec), {}, random_nonconstant(rng, spec, 2)}, spec);
            const Triple q = mat_apply(generator(MfGen{Poly::constant(E(1 + i % 3, spec))}, spec), spt);
            if (is_spt(q)) continue;
            ++nonstandard;
            const Normalization n = normalize_to_spt(q);
            REQUIRE(is_spt(n.spt));
            REQUIRE(height(n.spt) == height(q));
            REQUIRE(mat_apply(n.matrix, q) == n.spt);
        }
    }
    CHECK(nonstandard > 100);
}
