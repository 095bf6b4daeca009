#include <cctype>
#include <map>

#include "pyth/poly.hpp"

namespace pyth {

namespace {

constexpr int max_exponent = 1 << 16;

class PolyParser {
public:
    PolyParser(std::string_view text, FieldSpec spec) : text_(text), spec_(spec) {}

    Poly parse() {
        skip_ws();
        if (at_end()) throw ParseError(pos_, "empty polynomial");
        bool first = true;
        while (true) {
            skip_ws();
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw ParseError(pos_, "expected '+' or '-'");
            }
            parse_term(negative);
            first = false;
            skip_ws();
            if (at_end()) break;
        }
        std::vector<FieldElement> coeffs;
        if (!terms_.empty()) {
            coeffs.assign(static_cast<std::size_t>(terms_.rbegin()->first) + 1, FieldElement::zero(spec_));
            for (auto& [k, c] : terms_) coeffs[static_cast<std::size_t>(k)] = c;
        }
        return Poly(spec_, std::move(coeffs));
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    mpz_class parse_digits(const char* what) {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError(start, std::string("expected ") + what);
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    int parse_exponent() {
        skip_ws();
        if (peek() != '^') return 1;
        ++pos_;
        skip_ws();
        const std::size_t start = pos_;
        mpz_class e = parse_digits("exponent");
        if (e > max_exponent) throw ParseError(start, "exponent too large");
        return static_cast<int>(e.get_si());
    }

    void expect_variable() {
        skip_ws();
        if (peek() != 't') throw ParseError(pos_, "expected indeterminate 't'");
        ++pos_;
    }

    void parse_term(bool negative) {
        if (at_end()) throw ParseError(pos_, "expected a term");
        FieldElement coeff = FieldElement::one(spec_);
        int exponent = 0;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mpz_class num = parse_digits("coefficient");
            mpz_class den = 1;
            skip_ws();
            if (peek() == '/') {
                if (spec_.is_prime_field()) {
                    throw ParseError(pos_, "fraction syntax is invalid over " + spec_.to_string());
                }
                ++pos_;
                skip_ws();
                const std::size_t den_pos = pos_;
                den = parse_digits("denominator");
                if (den == 0) throw ParseError(den_pos, "zero denominator");
            }
            coeff = FieldElement::from_rational(spec_, mpq_class(num, den));
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                expect_variable();
                exponent = parse_exponent();
            } else if (!at_end() && peek() != '+' && peek() != '-') {
                throw ParseError(pos_, std::string("unexpected character '") + peek() + "'");
            }
        } else if (peek() == 't') {
            ++pos_;
            exponent = parse_exponent();
        } else {
            throw ParseError(pos_, std::string("unexpected character '") + peek() + "'");
        }
        if (negative) coeff = -coeff;
        auto [it, inserted] = terms_.try_emplace(exponent, coeff);
        if (!inserted) it->second += coeff;
    }

    std::string_view text_;
    FieldSpec spec_;
    std::size_t pos_ = 0;
    std::map<int, FieldElement> terms_;
};

bool is_negative(const FieldElement& c) {
    return c.spec().is_rationals() && sgn(c.rational()) < 0;
}

}  // namespace

Poly parse_poly(std::string_view text, FieldSpec spec) { return PolyParser(text, spec).parse(); }

FieldElement parse_element(std::string_view text, FieldSpec spec) {
    Poly p = parse_poly(text, spec);
    if (!p.is_constant()) throw ParseError(0, "expected a field element, got a polynomial");
    return p.coeff(0);
}

std::string render(const Poly& a) {
    if (a.is_zero()) return "0";
    std::string out;
    const auto& cs = a.coeffs();
    for (std::size_t k = cs.size(); k-- > 0;) {
        if (cs[k].is_zero()) continue;
        FieldElement c = cs[k];
        if (is_negative(c)) {
            out += '-';
            c = -c;
        } else if (!out.empty()) {
            out += '+';
        }
        if (k == 0) {
            out += c.to_string();
            continue;
        }
        if (!c.is_one()) out += c.to_string() + "*";
        out += 't';
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace pyth
