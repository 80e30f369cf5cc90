#pragma once

#include <algorithm>
#include <vector>

#include "bcflab/mpoly.hpp"

namespace bcflab {

// e_k(xs): coefficient of t^k in prod (1 + x_i t); zero for k < 0 or k > |xs|.
inline MPoly elementary_symmetric(const std::vector<MPoly>& xs, int k) {
    if (k < 0 || k > static_cast<int>(xs.size())) return MPoly();
    std::vector<MPoly> e(static_cast<std::size_t>(k) + 1);
    e[0] = MPoly::constant(1);
    for (const auto& x : xs)
        for (int j = k; j >= 1; --j)
            e[static_cast<std::size_t>(j)] += x * e[static_cast<std::size_t>(j - 1)];
    return e[static_cast<std::size_t>(k)];
}

// h_k(xs): sum of all monomials of degree k; h_0 = 1, zero for k < 0.
inline MPoly complete_homogeneous(const std::vector<MPoly>& xs, int k) {
    if (k < 0) return MPoly();
    std::vector<MPoly> h(static_cast<std::size_t>(k) + 1);
    h[0] = MPoly::constant(1);
    for (const auto& x : xs)
        for (int j = 1; j <= k; ++j)
            h[static_cast<std::size_t>(j)] += x * h[static_cast<std::size_t>(j - 1)];
    return h[static_cast<std::size_t>(k)];
}

}  // namespace bcflab
