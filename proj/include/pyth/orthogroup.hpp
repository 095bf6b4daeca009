#pragma once

/**
 * @file orthogroup.hpp
 * @brief Factorization in O_Q(K[t]), the orthogonal group of x^2 + y^2 - z^2.
 *
 * The group is generated by {R_f}, P_xy and {T_c}. factor() follows the
 * constructive route: send (0, 1, 1) through A, normalize the image to an
 * SPT, peel its Berggren word (the base c * S_g is M_{g/2} T_c (0, 1, 1)),
 * and close the remaining stabilizer element of (0, 1, 1) with its R_f form.
 */

#include <vector>

#include "pyth/berggren.hpp"
#include "pyth/transform.hpp"

namespace pyth {

/// Factors restricted to RfGen, PxyGen and TcGen, multiplied left to right.
using GeneratorWord = std::vector<Generator>;

/// Stabilizer element of (0, 1, 1), written through its first row (a1, a2, -a2):
///   a1 = -1  ->  R_{-a2/2}
///   a1 =  1  ->  R_{-a2/2} R_0
struct StabilizerForm {
    FieldElement a1;
    Poly a2;

    Mat3 expand() const;
    GeneratorWord generators() const;

    friend bool operator==(const StabilizerForm&, const StabilizerForm&) = default;
};

/// Throws NotOrthogonal, or NotStabilizer when r does not fix (0, 1, 1) or
/// departs from the closed form.
StabilizerForm stabilizer_factor(const Mat3& r);

/// Throws NotOrthogonal. The product of the result equals `a` exactly; T_1
/// and identity stabilizer factors are omitted.
GeneratorWord factor(const Mat3& a);

/// An orthogonal A with A (0, 1, 1)^T = q^T. Throws NotPrimitive or NotSPT
/// (for non-Pythagorean input).
Mat3 orbit_map(const Triple& q);

/// (0, 1, 1) over `spec`.
Triple axis_triple(FieldSpec spec);

}  // namespace pyth
