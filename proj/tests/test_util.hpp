#pragma once

#include <random>
#include <string>
#include <vector>

#include "bcflab/mpoly.hpp"

namespace testutil {

using bcflab::MPoly;
using bcflab::Rat;

inline MPoly random_poly(std::mt19937& rng, int max_vars = 4, int max_deg = 4,
                         int max_terms = 6) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::uniform_int_distribution<int> nv(0, max_vars - 1);
    std::uniform_int_distribution<int> ex(0, max_deg);
    MPoly acc;
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        MPoly term = MPoly::constant(coef(rng));
        int deg_left = max_deg;
        for (int v = 0; v < max_vars; ++v) {
            int e = ex(rng) % (deg_left + 1);
            if (e > 0 && nv(rng) < 2) {
                term *= MPoly::var("v" + std::to_string(v), static_cast<std::uint32_t>(e));
                deg_left -= e;
            }
        }
        acc += term;
    }
    return acc;
}

inline std::vector<MPoly> vars(const std::string& prefix, int count) {
    std::vector<MPoly> out;
    for (int i = 0; i < count; ++i) out.push_back(MPoly::var(prefix + std::to_string(i)));
    return out;
}

inline std::vector<MPoly> ones(int count) {
    return std::vector<MPoly>(static_cast<std::size_t>(count), MPoly::constant(1));
}

}  // namespace testutil
