#include "pyth/transform.hpp"

namespace pyth {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Poly constant(FieldSpec spec, long v) { return Poly::constant(FieldElement::from_int(spec, v)); }

void require_field(const Poly& p, FieldSpec spec) {
    if (!(p.spec() == spec)) throw Error(Errc::FieldMismatch, "generator parameter from another field");
}

Mat3 reflection_matrix(const Poly& f) {
    const FieldSpec spec = f.spec();
    const Poly one = constant(spec, 1);
    const Poly two_f = f.scaled(FieldElement::from_int(spec, 2));
    const Poly two_f2 = two_f * f;
    return Mat3(spec, {-one, -two_f, two_f,
                       -two_f, one - two_f2, two_f2,
                       -two_f, -two_f2, one + two_f2});
}

Mat3 descent_matrix(const Poly& f) {
    const FieldSpec spec = f.spec();
    const Poly one = constant(spec, 1);
    const Poly two_f = f.scaled(FieldElement::from_int(spec, 2));
    const Poly two_f2 = two_f * f;
    return Mat3(spec, {-one, two_f, two_f,
                       -two_f, two_f2 - one, two_f2,
                       -two_f, two_f2, two_f2 + one});
}

Mat3 diagonal(FieldSpec spec, long a, long b, long c) {
    return Mat3::from_ints(spec, {a, 0, 0, 0, b, 0, 0, 0, c});
}

// <u, v> for the form x^2 + y^2 - z^2.
Poly pairing(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] - u[2] * v[2]; }

}  // namespace

Mat3::Mat3(FieldSpec spec) : spec_(spec), entries_(9, Poly(spec)) {}

Mat3::Mat3(FieldSpec spec, std::vector<Poly> row_major) : spec_(spec), entries_(std::move(row_major)) {
    if (entries_.size() != 9) throw Error(Errc::MalformedWord, "a 3x3 matrix needs nine entries");
    for (const auto& e : entries_) require_field(e, spec_);
}

Mat3 Mat3::identity(FieldSpec spec) { return diagonal(spec, 1, 1, 1); }

Mat3 Mat3::from_ints(FieldSpec spec, std::initializer_list<long> row_major) {
    std::vector<Poly> entries;
    for (long v : row_major) entries.push_back(constant(spec, v));
    return Mat3(spec, std::move(entries));
}

Mat3 Mat3::transpose() const {
    Mat3 out(spec_);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out(c, r) = (*this)(r, c);
    return out;
}

bool Mat3::is_identity() const { return *this == identity(spec_); }

Mat3 generator(const Generator& kind, FieldSpec spec) {
    return std::visit(
        overloaded{
            [&](const MfGen& g) {
                require_field(g.f, spec);
                return descent_matrix(g.f);
            },
            [&](const RfGen& g) {
                require_field(g.f, spec);
                return reflection_matrix(g.f);
            },
            [&](const TcGen& g) {
                if (!(g.c.spec() == spec)) throw Error(Errc::FieldMismatch, "T_c parameter from another field");
                if (g.c.is_zero()) throw Error(Errc::DivisionByZero, "T_c needs c != 0");
                const FieldElement inv = g.c.inverse();
                const Poly plus = Poly::constant((g.c + inv).half());
                const Poly minus = Poly::constant((g.c - inv).half());
                Mat3 m = Mat3::identity(spec);
                m(1, 1) = plus;
                m(1, 2) = minus;
                m(2, 1) = minus;
                m(2, 2) = plus;
                return m;
            },
            [&](const PxyGen&) { return Mat3::from_ints(spec, {0, 1, 0, 1, 0, 0, 0, 0, 1}); },
            [&](const UdGen& g) {
                switch (g.d) {
                    case 1: return diagonal(spec, 1, -1, 1);
                    case 2: return diagonal(spec, -1, -1, 1);
                    case 3: return diagonal(spec, -1, 1, 1);
                    default: throw Error(Errc::MalformedWord, "U_d needs d in {1,2,3}, got " + std::to_string(g.d));
                }
            },
            [&](const JGen&) { return diagonal(spec, 1, 1, -1); },
        },
        kind);
}

std::string generator_name(const Generator& kind) {
    return std::visit(overloaded{
                          [](const MfGen& g) { return "Mf(" + render(g.f) + ")"; },
                          [](const RfGen& g) { return "Rf(" + render(g.f) + ")"; },
                          [](const TcGen& g) { return "Tc(" + g.c.to_string() + ")"; },
                          [](const PxyGen&) { return std::string("Pxy"); },
                          [](const UdGen& g) { return "U" + std::to_string(g.d); },
                          [](const JGen&) { return std::string("J"); },
                      },
                      kind);
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    if (!(a.spec() == b.spec())) throw Error(Errc::FieldMismatch, "matrix product across fields");
    Mat3 out(a.spec());
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            Poly acc(a.spec());
            for (int k = 0; k < 3; ++k) {
                if (a(r, k).is_zero() || b(k, c).is_zero()) continue;
                acc += a(r, k) * b(k, c);
            }
            out(r, c) = std::move(acc);
        }
    }
    return out;
}

Mat3 operator*(const Mat3& a, const Mat3& b) { return mat_mul(a, b); }

Vec3 mat_apply(const Mat3& a, const Vec3& v) {
    for (const auto& p : v) require_field(p, a.spec());
    Vec3 out{Poly(a.spec()), Poly(a.spec()), Poly(a.spec())};
    for (int r = 0; r < 3; ++r) {
        for (int k = 0; k < 3; ++k) {
            if (a(r, k).is_zero() || v[k].is_zero()) continue;
            out[r] += a(r, k) * v[k];
        }
    }
    return out;
}

Triple mat_apply(const Mat3& a, const Triple& q) {
    Vec3 v = mat_apply(a, Vec3{q.x(), q.y(), q.z()});
    return Triple(std::move(v[0]), std::move(v[1]), std::move(v[2]));
}

Mat3 mat_inverse_Mf(const Poly& f) {
    const FieldSpec spec = f.spec();
    const Poly one = constant(spec, 1);
    const Poly two_f = f.scaled(FieldElement::from_int(spec, 2));
    const Poly two_f2 = two_f * f;
    return Mat3(spec, {-one, -two_f, two_f,
                       two_f, two_f2 - one, -two_f2,
                       -two_f, -two_f2, two_f2 + one});
}

Mat3 orthogonal_inverse(const Mat3& a) {
    const Mat3 j = generator(JGen{}, a.spec());
    return j * a.transpose() * j;
}

Vec3 reflect(const Vec3& w, const Vec3& v) {
    const Poly norm = pairing(w, w);
    if (norm.is_zero()) throw Error(Errc::IsotropicVector, "Q(w) = 0");
    if (!norm.is_constant()) throw Error(Errc::NonUnitNorm, "Q(w) = " + render(norm) + " is not a unit of K[t]");
    const FieldSpec spec = norm.spec();
    const Poly factor = pairing(v, w).scaled(FieldElement::from_int(spec, 2) / norm.leading());
    return {v[0] - factor * w[0], v[1] - factor * w[1], v[2] - factor * w[2]};
}

bool is_orthogonal(const Mat3& a) {
    const Mat3 j = generator(JGen{}, a.spec());
    return a.transpose() * j * a == j;
}

bool rf_identities(const Poly& a, const Poly& b) {
    const Mat3 ra = reflection_matrix(a);
    const Mat3 rb = reflection_matrix(b);
    const Mat3 r0 = reflection_matrix(Poly(a.spec()));
    return ra * rb == reflection_matrix(a - b) * r0 && ra * r0 * rb == reflection_matrix(a + b);
}

Mat3 word_product(const std::vector<Generator>& word, FieldSpec spec) {
    Mat3 acc = Mat3::identity(spec);
    for (const auto& g : word) acc = acc * generator(g, spec);
    return acc;
}

}  // namespace pyth
