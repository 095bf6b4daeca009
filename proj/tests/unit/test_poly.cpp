#include <random>

#include "doctest.h"
#include "pyth/poly.hpp"

using namespace pyth;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F5 = FieldSpec::prime(5);

Poly P(const char* text, FieldSpec spec = Q) { return parse_poly(text, spec); }

Poly random_poly(std::mt19937_64& rng, FieldSpec spec, int max_deg) {
    std::uniform_int_distribution<int> deg(-1, max_deg);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    std::vector<FieldElement> cs;
    const int d = deg(rng);
    for (int k = 0; k <= d; ++k) {
        cs.push_back(spec.is_rationals() ? FieldElement::from_rational(spec, mpq_class(num(rng), den(rng)))
                                         : FieldElement::from_int(spec, num(rng)));
    }
    return Poly(spec, std::move(cs));
}

bool divides(const Poly& d, const Poly& a) { return euclid_divide(a, d).remainder.is_zero(); }

}  // namespace

TEST_CASE("arithmetic examples") {
    CHECK(P("t+1") * P("t-1") == P("t^2-1"));
    CHECK(P("t^2+1") - P("t^2-1") == P("2"));
    CHECK(render(P("t^2+1") - P("t^2")) == "1");
    CHECK(P("2*t", F3) + P("t", F3) == Poly(F3));
    CHECK(poly_arith(P("t"), P("t"), PolyOp::Mul) == P("t^2"));
    CHECK_THROWS_AS(P("t") + P("t", F3), Error);
}

TEST_CASE("degree and leading coefficient") {
    CHECK(degree(P("4*t^3-2*t")) == 3);
    CHECK(degree(P("7")) == 0);
    CHECK(degree(Poly(Q)) == NEG_INF);
    CHECK(NEG_INF < Degree(0));
    CHECK(NEG_INF < Degree(-1000));
    CHECK(NEG_INF + Degree(5) == NEG_INF);
    CHECK(leading(P("4*t^3-2*t")).to_string() == "4");
    try {
        (void)leading(Poly(Q));
        FAIL("leading of zero");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ZeroPolynomial);
    }
}

TEST_CASE("euclid_divide examples") {
    auto r = euclid_divide(P("4*t^4-3*t^2+1"), P("4*t^3-2*t"));
    CHECK(r.quotient == P("t"));
    CHECK(r.remainder == P("-t^2+1"));

    r = euclid_divide(P("t^2+1"), P("2*t"));
    CHECK(r.quotient == P("1/2*t"));
    CHECK(r.remainder == P("1"));

    r = euclid_divide(P("t"), P("t^2"));
    CHECK(r.quotient.is_zero());
    CHECK(r.remainder == P("t"));

    try {
        (void)euclid_divide(P("t"), Poly(Q));
        FAIL("divide by zero polynomial");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DivisionByZero);
    }
}

TEST_CASE("gcd examples") {
    const Poly triple[] = {P("2*t"), P("t^2-1"), P("t^2+1")};
    CHECK(gcd_many(triple) == P("1"));
    CHECK(gcd(P("3*t^2"), P("6*t")) == P("t"));
    CHECK(gcd(Poly(Q), P("5")) == P("1"));
    CHECK(gcd(P("t^2-1"), P("t^2+2*t+1")) == P("t+1"));
    const Poly zeros[] = {Poly(Q), Poly(Q)};
    try {
        (void)gcd_many(zeros);
        FAIL("gcd of zeros");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ZeroIdeal);
    }
    CHECK_THROWS_AS(gcd_many(std::span<const Poly>{}), Error);
}

TEST_CASE("compose examples") {
    CHECK(compose(P("t^2-1", F3), P("t+1", F3)) == P("t^2+2*t", F3));
    CHECK(compose(P("t^2"), P("2*t+1")) == P("4*t^2+4*t+1"));
    CHECK(compose(P("5"), P("t^3")) == P("5"));
    CHECK(compose(P("t"), P("t^2-3")) == P("t^2-3"));
}

TEST_CASE("parse and render") {
    CHECK(render(P("4*t^3 - 2*t")) == "4*t^3-2*t");
    CHECK(render(P("1/2*t")) == "1/2*t");
    CHECK(render(P("-t^2+1")) == "-t^2+1");
    CHECK(render(P("0")) == "0");
    CHECK(render(P("t+t")) == "2*t");
    CHECK(render(P("t-t")) == "0");
    CHECK(render(P("-1/2", Q)) == "-1/2");
    CHECK(render(P("-1", F5)) == "4");
    CHECK(render(P("7*t^2+t", F5)) == "2*t^2+t");

    for (const char* bad : {"", "t^", "2**t", "t+", "x", "1/0", "t^99999999", "3 t"}) {
        CHECK_THROWS_AS(P(bad), ParseError);
    }
    try {
        (void)P("1/2*t", F5);
        FAIL("fraction accepted over F_5");
    } catch (const ParseError& e) {
        CHECK(e.code() == Errc::ParseError);
        CHECK(e.position() == 1);
    }
    CHECK(parse_element("3/4", Q).to_string() == "3/4");
    CHECK_THROWS_AS(parse_element("t", Q), ParseError);
}

TEST_CASE("render and parse round trip") {
    std::mt19937_64 rng(7);
    for (FieldSpec spec : {Q, F3, FieldSpec::prime(101)}) {
        for (int i = 0; i < 2000; ++i) {
            const Poly a = random_poly(rng, spec, 8);
            REQUIRE(parse_poly(render(a), spec) == a);
        }
    }
}

TEST_CASE("division properties") {
    std::mt19937_64 rng(11);
    int checked = 0;
    for (FieldSpec spec : {Q, F3, F5, FieldSpec::prime(4294967291ull)}) {
        for (int i = 0; i < 3200; ++i) {
            const Poly z = random_poly(rng, spec, 9);
            const Poly x = random_poly(rng, spec, 5);
            if (x.is_zero()) continue;
            const auto [q, r] = euclid_divide(z, x);
            REQUIRE(q * x + r == z);
            REQUIRE(degree(r) < degree(x));
            ++checked;
        }
    }
    CHECK(checked >= 10000);
}

TEST_CASE("gcd properties") {
    std::mt19937_64 rng(13);
    int checked = 0;
    for (FieldSpec spec : {Q, F3, F5}) {
        for (int i = 0; i < 3600; ++i) {
            // A shared factor makes nontrivial gcds common.
            const Poly common = random_poly(rng, spec, 2);
            Poly a = random_poly(rng, spec, 5), b = random_poly(rng, spec, 5);
            if (!common.is_zero()) {
                a = a * common;
                b = b * common;
            }
            if (a.is_zero() && b.is_zero()) continue;
            const ExtGcd e = ext_gcd(a, b);
            REQUIRE(e.gcd.leading().is_one());
            REQUIRE(divides(e.gcd, a));
            REQUIRE(divides(e.gcd, b));
            REQUIRE(e.s * a + e.t * b == e.gcd);
            REQUIRE(gcd(a, b) == e.gcd);
            if (!common.is_zero()) REQUIRE(divides(common, e.gcd));
            ++checked;
        }
    }
    CHECK(checked >= 10000);
}

TEST_CASE("compose properties") {
    std::mt19937_64 rng(17);
    int checked = 0;
    for (FieldSpec spec : {Q, F3, FieldSpec::prime(7)}) {
        for (int i = 0; i < 3400; ++i) {
            const Poly f = random_poly(rng, spec, 3), g = random_poly(rng, spec, 3), h = random_poly(rng, spec, 3);
            REQUIRE(compose(compose(h, g), f) == compose(h, compose(g, f)));
            if (!f.is_constant() && !g.is_zero()) {
                REQUIRE(degree(compose(g, f)).value() == degree(g).value() * degree(f).value());
            }
            // Pointwise check against plain evaluation.
            const FieldElement pt = FieldElement::from_int(spec, i % 11 - 5);
            REQUIRE(compose(g, f).evaluate(pt) == g.evaluate(f.evaluate(pt)));
            ++checked;
        }
    }
    CHECK(checked >= 10000);
}
