#pragma once

/**
 * @file transform.hpp
 * @brief 3x3 matrices over K[t] and the named generators acting on triples.
 *
 * All matrices act on column vectors (x, y, z)^T and preserve (or are tested
 * against) the form x^2 + y^2 - z^2, whose Gram matrix is J = diag(1, 1, -1).
 *
 *   R_f  reflection across (1, f, f)
 *   M_f  = R_f U_1, the descent matrix
 *   T_c  maps (0, 1, 1) to (0, c, c)
 *   P_xy swaps x and y
 *   U_d  the sign changes diag(1,-1,1), diag(-1,-1,1), diag(-1,1,1)
 */

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "pyth/poly.hpp"
#include "pyth/triple.hpp"

namespace pyth {

using Vec3 = std::array<Poly, 3>;

class Mat3 {
public:
    /// The zero matrix.
    explicit Mat3(FieldSpec spec);
    /// Row-major; all entries must share `spec`.
    Mat3(FieldSpec spec, std::vector<Poly> row_major);

    static Mat3 identity(FieldSpec spec);
    static Mat3 from_ints(FieldSpec spec, std::initializer_list<long> row_major);

    const FieldSpec& spec() const noexcept { return spec_; }
    const Poly& operator()(int row, int col) const { return entries_[static_cast<std::size_t>(3 * row + col)]; }
    Poly& operator()(int row, int col) { return entries_[static_cast<std::size_t>(3 * row + col)]; }
    const std::vector<Poly>& entries() const noexcept { return entries_; }

    Mat3 transpose() const;
    bool is_identity() const;

    friend bool operator==(const Mat3&, const Mat3&) = default;

private:
    FieldSpec spec_;
    std::vector<Poly> entries_;
};

struct MfGen {
    Poly f;
    friend bool operator==(const MfGen&, const MfGen&) = default;
};
struct RfGen {
    Poly f;
    friend bool operator==(const RfGen&, const RfGen&) = default;
};
struct TcGen {
    FieldElement c;
    friend bool operator==(const TcGen&, const TcGen&) = default;
};
struct PxyGen {
    friend bool operator==(PxyGen, PxyGen) = default;
};
struct UdGen {
    int d;
    friend bool operator==(UdGen, UdGen) = default;
};
struct JGen {
    friend bool operator==(JGen, JGen) = default;
};

using Generator = std::variant<MfGen, RfGen, TcGen, PxyGen, UdGen, JGen>;

/// Throws DivisionByZero for T_0 and MalformedWord for U_d with d outside {1,2,3}.
Mat3 generator(const Generator& kind, FieldSpec spec);
/// E.g. "Mf(t)", "Tc(3)", "Pxy", "U1", "J".
std::string generator_name(const Generator& kind);

Mat3 mat_mul(const Mat3& a, const Mat3& b);
Mat3 operator*(const Mat3& a, const Mat3& b);
Vec3 mat_apply(const Mat3& a, const Vec3& v);
Triple mat_apply(const Mat3& a, const Triple& q);

/// Closed form M_f^{-1} = U_1 R_f.
Mat3 mat_inverse_Mf(const Poly& f);
/// J A^T J, the inverse of any orthogonal A.
Mat3 orthogonal_inverse(const Mat3& a);

/// v - 2<v,w>/Q(w) * w. Throws IsotropicVector when Q(w) = 0 and NonUnitNorm
/// when Q(w) is not a nonzero constant.
Vec3 reflect(const Vec3& w, const Vec3& v);

/// A^T J A == J.
bool is_orthogonal(const Mat3& a);

/// Checks R_a R_b = R_{a-b} R_0 and R_a R_0 R_b = R_{a+b}.
bool rf_identities(const Poly& a, const Poly& b);

/// Product of generators left to right; identity for an empty list.
Mat3 word_product(const std::vector<Generator>& word, FieldSpec spec);

}  // namespace pyth
