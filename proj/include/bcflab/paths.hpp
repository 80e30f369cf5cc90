#pragma once

#include <vector>

#include "bcflab/weights.hpp"

namespace bcflab::paths {

using bcf::Family;
using bcf::WeightSystem;

struct Step {
    int dy;       // height change
    int dx;       // abscissa advance: 1, or 2 for the Schroeder long step
    bool is_long() const { return dx == 2; }
};

struct LatticePath {
    Family family;
    int m = 1;
    int start_height = 0;
    std::vector<Step> steps;

    int end_height() const {
        int h = start_height;
        for (auto& s : steps) h += s.dy;
        return h;
    }
    int length() const {
        int l = 0;
        for (auto& s : steps) l += s.dx;
        return l;
    }
};

// All paths of the family from (0, start_height) to (length, end_height)
// that never drop below height 0. Deliberately a plain depth-first search.
std::vector<LatticePath> enumerate_paths(Family family, int m, int start_height,
                                         int end_height, int length);

// Generating polynomial S_{n,k}, T_{n,k} or J_{n,k} by summing path weights.
MPoly oracle_gen_poly(Family family, int m, int n, int k, const WeightSystem& w);

// Partial-path polynomial S_{n|ell} (family S) or T_{n|ell} (family T).
MPoly oracle_partial_poly(Family family, int m, int n, int ell, const WeightSystem& w);

// Generating polynomial over ordered forests of ordered trees with n+1
// vertices and k+1 components, every vertex having at most m+1 children;
// a vertex at level L with c >= 1 children weighs beta_{L+c-1}^{(c-1)}.
MPoly forest_oracle(int m, int n, int k, const WeightSystem& j_weights);

enum class TreeKind { Ary, MultiAry, IncreasingAry, IncreasingMultiAry };

struct TreeOracleOptions {
    bool root_constraint = false;      // edges from roots must be 0-edges
    std::vector<MPoly> level_weights;  // c_L; empty means all ones
};

// Generating polynomial over (forests of) the four tree families with n+1
// vertices and k+1 components; each i-edge weighs x[i]. Increasing kinds use
// unordered forests and apply the level weights c with the stated division by
// c_0...c_k; plain kinds use ordered forests.
MPoly tree_oracle(TreeKind kind, int m, int n, int k, const std::vector<MPoly>& x,
                  const TreeOracleOptions& opts = {});

// Total weight of (m+1)-abscissa-unit walk segments in the Schroeder graph
// from height h0 to height h1 (rise 1, m-fall alpha, long step delta), with
// long steps forbidden from start heights h where skip_start(h) is true.
MPoly schroeder_segment_weight(int m, int h0, int h1, const WeightSystem& w,
                               const std::function<bool(int)>& skip_start,
                               bool use_delta);

}  // namespace bcflab::paths
