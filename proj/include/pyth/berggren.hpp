#pragma once

/**
 * @file berggren.hpp
 * @brief Unique decomposition of standard Pythagorean triples over K[t].
 *
 * A standard Pythagorean triple (SPT) is a primitive triple with
 * deg x < deg y = deg z and equal leading coefficients of y and z. Every SPT
 * with x != 0 is uniquely
 *
 *     c * M_{f_1} * ... * M_{f_k} * S_base,    S_f = (2f, f^2 - 1, f^2 + 1),
 *
 * with c a nonzero constant and f_1..f_k, base non-constant. Reconstruction
 * applies M_{f_k} to S_base first. SPTs with x = 0 are exactly (0, c, c) and
 * are recorded with the AXIS marker instead of a base polynomial.
 *
 * decompose() runs the descent: divide z by x, strip M_f with f the quotient,
 * and repeat until deg z = 2 deg x, where the triple is c * S_f.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "pyth/transform.hpp"
#include "pyth/triple.hpp"

namespace pyth {

struct BerggrenWord {
    FieldElement c;
    std::vector<Poly> word;
    /// std::nullopt is the AXIS marker: the triple is (0, c, c).
    std::optional<Poly> base;

    bool is_axis() const noexcept { return !base.has_value(); }

    friend bool operator==(const BerggrenWord&, const BerggrenWord&) = default;
};

struct DescentStep {
    Poly f;
    Triple next;
};

/// Requires an SPT with x != 0 and deg z != 2 deg x (NotDescendable otherwise).
DescentStep descent_step(const Triple& q);

struct BaseCase {
    FieldElement c;
    Poly f;
};

/// Requires an SPT with x != 0 and deg z = 2 deg x; returns (c, f) with
/// q = c * S_f. Throws InvariantViolation if the closed form does not hold.
BaseCase base_case_extract(const Triple& q);

/// Throws NotSPT for anything but an SPT.
BerggrenWord decompose(const Triple& q);

/// Throws MalformedWord for constant f_i / base, zero c, or foreign fields.
Triple reconstruct(const BerggrenWord& w, FieldSpec spec);

struct Normalization {
    Mat3 matrix;  ///< M_f^{-1} with f constant
    FieldElement f;
    Triple spt;
};

/// For a primitive non-standard triple, picks the constant f prescribed by its
/// type (I: 0, II: l(x)/(2l(z)), III: l(x)/(2(l(z)-l(y))), IV: -l(x)/(2l(y)))
/// and returns M_f^{-1} together with the SPT M_f^{-1} q.
Normalization normalize_to_spt(const Triple& q);

struct TreeNode {
    Triple triple;
    BerggrenWord word;
    int height;
    /// Index of the node this one was obtained from by one M_f, if any.
    std::optional<std::size_t> parent;
};

struct EnumerationOptions {
    int max_height = 2;
    unsigned jobs = 1;
    /// Finite coefficient set used for every f and for c. Mandatory over Q;
    /// over F_p it defaults to the whole field.
    std::optional<std::vector<FieldElement>> coefficients;
};

/// Every SPT with x != 0 and height <= max_height (whose word uses only the
/// allowed coefficients), exactly once, sorted by height then rendered text.
std::vector<TreeNode> enumerate_tree(FieldSpec spec, const EnumerationOptions& options);

/// All polynomials of exact degree `deg` with coefficients in `coefficients`.
std::vector<Poly> polynomials_of_degree(FieldSpec spec, const std::vector<FieldElement>& coefficients, int deg);

}  // namespace pyth
