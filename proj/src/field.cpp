#include "pyth/field.hpp"

#include <charconv>

namespace pyth {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp != 0) {
        if (exp & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return result;
}

std::uint64_t reduce_mpz(const mpz_class& value, std::uint64_t p) {
    mpz_class r = value % mpz_class(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p == 2) throw Error(Errc::InvalidField, "characteristic 2 is not supported");
    if (p > max_modulus) {
        throw Error(Errc::InvalidField, "modulus " + std::to_string(p) + " exceeds 2^32-1");
    }
    if (!is_prime(p)) throw Error(Errc::InvalidField, std::to_string(p) + " is not prime");
    return FieldSpec(Kind::PrimeField, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    constexpr std::string_view prefix = "fp:";
    if (text.substr(0, prefix.size()) == prefix) {
        std::string_view digits = text.substr(prefix.size());
        std::uint64_t p = 0;
        auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc() && end == digits.data() + digits.size() && !digits.empty()) {
            return prime(p);
        }
    }
    throw Error(Errc::InvalidField, "field must be 'q' or 'fp:<p>', got '" + std::string(text) + "'");
}

std::string FieldSpec::to_string() const {
    return is_rationals() ? std::string("q") : "fp:" + std::to_string(modulus_);
}

FieldElement FieldElement::zero(FieldSpec spec) { return from_int(spec, 0); }

FieldElement FieldElement::one(FieldSpec spec) { return from_int(spec, 1); }

FieldElement FieldElement::from_int(FieldSpec spec, long value) {
    if (spec.is_rationals()) return FieldElement(spec, mpq_class(value));
    auto p = static_cast<long long>(spec.modulus());
    long long r = static_cast<long long>(value) % p;
    if (r < 0) r += p;
    return FieldElement(spec, static_cast<std::uint64_t>(r));
}

FieldElement FieldElement::from_rational(FieldSpec spec, const mpq_class& value) {
    if (spec.is_rationals()) {
        mpq_class v = value;
        v.canonicalize();
        return FieldElement(spec, std::move(v));
    }
    const std::uint64_t p = spec.modulus();
    std::uint64_t num = reduce_mpz(value.get_num(), p);
    std::uint64_t den = reduce_mpz(value.get_den(), p);
    if (den == 0) {
        throw Error(Errc::DivisionByZero, "denominator vanishes in " + spec.to_string());
    }
    return FieldElement(spec, mul_mod(num, pow_mod(den, p - 2, p), p));
}

bool FieldElement::is_zero() const noexcept {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldElement::is_one() const noexcept {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
    return std::get<mpq_class>(value_) == 1;
}

std::uint64_t FieldElement::residue() const {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return *r;
    throw Error(Errc::FieldMismatch, "residue requested from a rational element");
}

const mpq_class& FieldElement::rational() const {
    if (auto q = std::get_if<mpq_class>(&value_)) return *q;
    throw Error(Errc::FieldMismatch, "rational value requested from a prime-field element");
}

void FieldElement::require_same_field(const FieldElement& other) const {
    if (!(spec_ == other.spec_)) {
        throw Error(Errc::FieldMismatch, spec_.to_string() + " vs " + other.spec_.to_string());
    }
}

FieldElement FieldElement::operator-() const {
    if (auto r = std::get_if<std::uint64_t>(&value_)) {
        return FieldElement(spec_, *r == 0 ? 0 : spec_.modulus() - *r);
    }
    return FieldElement(spec_, mpq_class(-std::get<mpq_class>(value_)));
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    require_same_field(rhs);
    if (auto r = std::get_if<std::uint64_t>(&value_)) {
        *r = (*r + std::get<std::uint64_t>(rhs.value_)) % spec_.modulus();
    } else {
        std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    require_same_field(rhs);
    if (auto r = std::get_if<std::uint64_t>(&value_)) {
        const std::uint64_t p = spec_.modulus();
        *r = (*r + p - std::get<std::uint64_t>(rhs.value_)) % p;
    } else {
        std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    require_same_field(rhs);
    if (auto r = std::get_if<std::uint64_t>(&value_)) {
        *r = mul_mod(*r, std::get<std::uint64_t>(rhs.value_), spec_.modulus());
    } else {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
    require_same_field(rhs);
    return *this *= rhs.inverse();
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    if (auto r = std::get_if<std::uint64_t>(&value_)) {
        const std::uint64_t p = spec_.modulus();
        return FieldElement(spec_, pow_mod(*r, p - 2, p));
    }
    return FieldElement(spec_, mpq_class(1 / std::get<mpq_class>(value_)));
}

FieldElement FieldElement::half() const {
    if (auto r = std::get_if<std::uint64_t>(&value_)) {
        // (p + 1) / 2 is the inverse of 2 mod p.
        const std::uint64_t p = spec_.modulus();
        return FieldElement(spec_, mul_mod(*r, (p + 1) / 2, p));
    }
    return FieldElement(spec_, mpq_class(std::get<mpq_class>(value_) / 2));
}

std::string FieldElement::to_string() const {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return std::to_string(*r);
    return std::get<mpq_class>(value_).get_str();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (!(a.spec_ == b.spec_)) return false;
    if (auto r = std::get_if<std::uint64_t>(&a.value_)) return *r == std::get<std::uint64_t>(b.value_);
    return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::strong_ordering compare(const FieldElement& a, const FieldElement& b) {
    a.require_same_field(b);
    if (auto r = std::get_if<std::uint64_t>(&a.value_)) return *r <=> std::get<std::uint64_t>(b.value_);
    int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op) {
    switch (op) {
        case FieldOp::Add: return a + b;
        case FieldOp::Sub: return a - b;
        case FieldOp::Mul: return a * b;
        case FieldOp::Div: return a / b;
    }
    throw Error(Errc::InvariantViolation, "unknown field operation");
}

}  // namespace pyth
