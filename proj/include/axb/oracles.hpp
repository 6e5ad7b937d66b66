#pragma once

// Brute-force reference computations that share no code path with the closed forms
// they are compared against.

#include <algorithm>
#include <optional>
#include <vector>

#include "axb/affine_semigroup.hpp"

namespace axb::oracle {

/// x ≤ z in P, straight from the definition: x^{-1} z = ((l - m)/a, c/a) ∈ N ⋊ N^x.
inline bool below(const SemigroupElement& x, const SemigroupElement& z) {
    return z.a % x.a == 0 && z.m >= x.m && (z.m - x.m) % x.a == 0;
}

/// The least common upper bound by search: the smallest c divisible by both a and b
/// (scanning c = 1, 2, ...), then the smallest l ≥ max(m, n) with (l, c) above both.
/// Congruences mod c repeat with period c, so an empty scan of [max, max + c) means
/// there is no common upper bound.
inline std::optional<SemigroupElement> lub(const SemigroupElement& x, const SemigroupElement& y) {
    Int c = 1;
    while (c % x.a != 0 || c % y.a != 0) ++c;
    Int lo = std::max(x.m, y.m);
    for (Int l = lo; l < lo + c; ++l) {
        SemigroupElement z{l, c};
        if (below(x, z) && below(y, z)) return z;
    }
    return std::nullopt;
}

/// All common upper bounds (l, c) with l ≤ max_l and c ≤ max_c.
inline std::vector<SemigroupElement> common_upper_bounds(const SemigroupElement& x, const SemigroupElement& y,
                                                         Int max_l, Int max_c) {
    std::vector<SemigroupElement> out;
    for (Int c = 1; c <= max_c; ++c)
        for (Int l = 0; l <= max_l; ++l) {
            SemigroupElement z{l, c};
            if (below(x, z) && below(y, z)) out.push_back(z);
        }
    return out;
}

}  // namespace axb::oracle
