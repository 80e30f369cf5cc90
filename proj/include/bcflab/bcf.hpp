#pragma once

#include <functional>
#include <set>
#include <variant>
#include <vector>

#include "bcflab/series.hpp"
#include "bcflab/weights.hpp"

namespace bcflab::bcf {

// Unit-lower-triangular array of generalized polynomials.
struct Triangle {
    Family family = Family::S;
    int m = 1;
    int N = 0;
    std::vector<std::vector<MPoly>> rows;  // rows[n] has n+1 entries

    const MPoly& at(int n, int k) const {
        return rows.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(k));
    }
    std::vector<MPoly> column(int k) const;
    bool operator==(const Triangle& o) const {
        return family == o.family && m == o.m && N == o.N && rows == o.rows;
    }
};

// Lattice DP over partial-path states; rows[n][k] is the generalized
// m-Stieltjes-Rogers / m-Thron-Rogers / m-Jacobi-Rogers polynomial.
// Work within each DP column is split across threads.
Triangle compute_triangle(Family family, int m, const WeightSystem& weights, int N);

// Single-threaded reference implementation, kept for testing and benchmarks.
Triangle compute_triangle_serial(Family family, int m, const WeightSystem& weights, int N);

// Partial sequence: entry n is S_{n|ell} (family S) or T_{n|ell} (family T).
std::vector<MPoly> compute_partial(Family family, int m, const WeightSystem& weights, int ell,
                                   int N);

// Selector for embed_weights: either an explicit good-set membership test, or
// (Thron) a set of residues J in {1,..,m'-1} of cardinality m'-m.
struct GoodSet {
    std::function<bool(long)> contains;
};
struct ThronResidues {
    std::set<long> residues;
};
using EmbedSelector = std::variant<GoodSet, ThronResidues>;

// Rewrites m-weights as m'-weights with zeros on the good set; guarantees
// S_n^{(m')}(alpha') = S_n^{(m)}(alpha) (resp. the T equality). The good-set
// conditions are validated on the index window [m', m'*window_N].
WeightSystem embed_weights(int m, int m_prime, const EmbedSelector& selector,
                           const WeightSystem& weights, int window_N);

// Euler-Gauss recurrence check: g[0] is g_{-1}, g[K+1] is g_K. True iff all
// constant terms are 1 (else ConstantTermNotOne), the recurrence
// g_k - g_{k-1} = alpha_{k+m} t g_{k+m} holds for 0 <= k <= K-m modulo
// t^{N+1}, and g_0/g_{-1} agrees with sum S_n^{(m)}(alpha) t^n up to order
// min(N, order of g_{-1}, order of g_0).
bool euler_gauss_verify(int m, const std::vector<SeriesTrunc>& g, const WeightSystem& alpha,
                        int N);

}  // namespace bcflab::bcf
