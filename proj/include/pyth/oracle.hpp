#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force ground truth over small prime fields.
 *
 * brute_force_triples() walks every coefficient vector for (x, y, z) with
 * degrees <= max_deg and keeps the primitive solutions of x^2 + y^2 = z^2.
 * It uses its own residue arithmetic and never touches the Berggren code,
 * so cross_validate() can compare the two literally.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pyth/field.hpp"
#include "pyth/triple.hpp"

namespace pyth {

struct SearchBounds {
    FieldSpec field;
    int max_deg;
};

inline constexpr std::uint64_t max_search_candidates = 100'000'000;

/// p^(3 (max_deg + 1)), saturating at UINT64_MAX.
std::uint64_t search_space_size(const SearchBounds& b);

/// Sorted by (z, x, y) coefficient index. Throws SearchTooLarge above
/// max_search_candidates and InvalidField over Q or for max_deg < 0.
std::vector<Triple> brute_force_triples(const SearchBounds& b, unsigned jobs = 1);

struct HeightCounts {
    std::size_t primitive = 0;  ///< brute-force primitive triples
    std::size_t spt = 0;        ///< of which SPT with x != 0
    std::size_t tree = 0;       ///< enumerate_tree nodes
};

struct CensusReport {
    SearchBounds bounds;
    std::uint64_t candidates = 0;
    std::map<int, HeightCounts> counts_by_height;
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Checks, at the given bounds: the SPT (x != 0) part of the brute-force set
/// equals enumerate_tree(max_height = max_deg); decompose/reconstruct round
/// trips; classify is total on primitive triples; orbit_map reaches every
/// primitive triple from (0, 1, 1).
CensusReport cross_validate(const SearchBounds& b, unsigned jobs = 1);

}  // namespace pyth
