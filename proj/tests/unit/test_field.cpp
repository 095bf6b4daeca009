#include <random>

#include "doctest.h"
#include "pyth/field.hpp"

using namespace pyth;

namespace {

const FieldSpec Q = FieldSpec::rationals();

FieldElement rat(long n, long d = 1) { return FieldElement::from_rational(Q, mpq_class(n, d)); }
FieldElement res(FieldSpec f, long v) { return FieldElement::from_int(f, v); }

// Independent oracle: the k in [0, p) with b*k = a mod p, by search.
long brute_divide(long a, long b, long p) {
    for (long k = 0; k < p; ++k) {
        if ((b * k) % p == a % p) return k;
    }
    return -1;
}

}  // namespace

TEST_CASE("field spec construction") {
    CHECK(FieldSpec::prime(3).modulus() == 3);
    CHECK(FieldSpec::parse("q").is_rationals());
    CHECK(FieldSpec::parse("fp:13") == FieldSpec::prime(13));
    CHECK(FieldSpec::parse("fp:13").to_string() == "fp:13");

    for (std::uint64_t bad : {0ull, 1ull, 2ull, 9ull, 15ull, 91ull}) {
        CHECK_THROWS_AS(FieldSpec::prime(bad), Error);
    }
    try {
        FieldSpec::prime(2);
        FAIL("characteristic 2 accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InvalidField);
    }
    CHECK_THROWS_AS(FieldSpec::parse("fp:"), Error);
    CHECK_THROWS_AS(FieldSpec::parse("fp:7x"), Error);
    CHECK_THROWS_AS(FieldSpec::parse("r"), Error);
}

TEST_CASE("field_arith examples") {
    CHECK(field_arith(rat(1, 2), rat(1, 3), FieldOp::Add) == rat(5, 6));
    CHECK(field_arith(rat(1, 2), rat(1, 3), FieldOp::Add).to_string() == "5/6");

    const FieldSpec f5 = FieldSpec::prime(5);
    CHECK(field_arith(res(f5, 3), res(f5, 4), FieldOp::Mul) == res(f5, 2));

    const FieldSpec f7 = FieldSpec::prime(7);
    const long expected = brute_divide(3, 2, 7);
    CHECK(expected == 5);
    CHECK(field_arith(res(f7, 3), res(f7, 2), FieldOp::Div) == res(f7, expected));
}

TEST_CASE("field_arith errors") {
    const FieldSpec f5 = FieldSpec::prime(5);
    try {
        (void)field_arith(rat(1), rat(0), FieldOp::Div);
        FAIL("division by zero accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DivisionByZero);
    }
    try {
        (void)field_arith(rat(1), res(f5, 1), FieldOp::Add);
        FAIL("mixed fields accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::FieldMismatch);
    }
    CHECK_THROWS_AS((void)(res(f5, 1) * res(FieldSpec::prime(7), 1)), Error);
}

TEST_CASE("invert and halve examples") {
    CHECK(invert(rat(4)) == rat(1, 4));
    const FieldSpec f13 = FieldSpec::prime(13);
    CHECK(invert(res(f13, 2)) == res(f13, brute_divide(1, 2, 13)));
    CHECK(invert(res(f13, 2)) == res(f13, 7));
    const FieldSpec f3 = FieldSpec::prime(3);
    CHECK(invert(res(f3, 2)) == res(f3, 2));
    CHECK_THROWS_AS(invert(rat(0)), Error);

    CHECK(halve(rat(1)) == rat(1, 2));
    const FieldSpec f5 = FieldSpec::prime(5);
    CHECK(halve(res(f5, 1)) == res(f5, brute_divide(1, 2, 5)));
    CHECK(halve(res(f5, 1)) == res(f5, 3));
    CHECK(halve(res(FieldSpec::prime(7), 4)) == res(FieldSpec::prime(7), 2));
}

TEST_CASE("canonical form") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(3, -6).to_string() == "-1/2");
    CHECK(rat(0, 5).to_string() == "0");
    CHECK(rat(0, 5).rational().get_den() == 1);
    CHECK(res(FieldSpec::prime(7), -1).to_string() == "6");
    CHECK(FieldElement::from_rational(FieldSpec::prime(7), mpq_class(1, 2)) == res(FieldSpec::prime(7), 4));
    CHECK_THROWS_AS(FieldElement::from_rational(FieldSpec::prime(7), mpq_class(1, 7)), Error);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(20240101);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    const FieldSpec fields[] = {Q, FieldSpec::prime(3), FieldSpec::prime(5), FieldSpec::prime(13),
                                FieldSpec::prime(4294967291ull)};
    for (const auto& spec : fields) {
        auto draw = [&] {
            if (spec.is_rationals()) return FieldElement::from_rational(spec, mpq_class(num(rng), den(rng)));
            return FieldElement::from_int(spec, num(rng) * 1000003 + num(rng));
        };
        for (int i = 0; i < 4000; ++i) {
            const FieldElement a = draw(), b = draw(), c = draw();
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a - a == FieldElement::zero(spec));
            REQUIRE(halve(a) + halve(a) == a);
            if (!a.is_zero()) {
                REQUIRE(a * invert(a) == FieldElement::one(spec));
                REQUIRE(invert(invert(a)) == a);
                REQUIRE((b / a) * a == b);
            }
        }
    }
}
