#include "bcflab/paths.hpp"

#include <algorithm>
#include <functional>

#include "bcflab/error.hpp"

namespace bcflab::paths {

namespace {

void dfs_paths(Family family, int m, int h, int remaining, int end_height,
               std::vector<Step>& acc, std::vector<LatticePath>& out, int start_height) {
    if (remaining == 0) {
        if (h == end_height) {
            LatticePath p;
            p.family = family;
            p.m = m;
            p.start_height = start_height;
            p.steps = acc;
            out.push_back(std::move(p));
        }
        return;
    }
    if (h + remaining < end_height) return;  // cannot climb enough
    auto try_step = [&](int dy, int dx) {
        if (dx > remaining) return;
        int nh = h + dy;
        if (nh < 0) return;
        acc.push_back({dy, dx});
        dfs_paths(family, m, nh, remaining - dx, end_height, acc, out, start_height);
        acc.pop_back();
    };
    switch (family) {
        case Family::S:
            try_step(1, 1);
            try_step(-m, 1);
            break;
        case Family::T:
            try_step(1, 1);
            try_step(-m, 1);
            try_step(-(m - 1), 2);
            break;
        case Family::J:
            for (int dy = 1; dy >= -m; --dy) try_step(dy, 1);
            break;
    }
}

MPoly path_weight(const LatticePath& p, const WeightSystem& w) {
    MPoly acc = MPoly::constant(1);
    int h = p.start_height;
    for (auto& s : p.steps) {
        if (p.family == Family::J) {
            if (s.dy <= 0) acc *= w.beta(-s.dy, h);
        } else if (s.is_long()) {
            acc *= w.delta(h + 1);
        } else if (s.dy < 0) {
            acc *= w.alpha(h);
        }
        h += s.dy;
    }
    return acc;
}

MPoly sum_weights(Family family, int m, int start, int end, int length,
                  const WeightSystem& w) {
    MPoly acc;
    for (auto& p : enumerate_paths(family, m, start, end, length)) acc += path_weight(p, w);
    return acc;
}

// ---- ordered trees and forests ------------------------------------------

struct TreeShape {
    std::vector<TreeShape> kids;
    int size() const {
        int s = 1;
        for (auto& k : kids) s += k.size();
        return s;
    }
};

// all ordered trees on v vertices with out-degree <= maxdeg
std::vector<TreeShape> all_trees(int v, int maxdeg);

// ordered forests with given component count, total vertices, degree bound
std::vector<std::vector<TreeShape>> all_forests(int vertices, int components, int maxdeg) {
    std::vector<std::vector<TreeShape>> out;
    if (components == 0) {
        if (vertices == 0) out.push_back({});
        return out;
    }
    for (int first = 1; first + (components - 1) <= vertices; ++first) {
        auto heads = all_trees(first, maxdeg);
        auto tails = all_forests(vertices - first, components - 1, maxdeg);
        for (auto& h : heads)
            for (auto& t : tails) {
                std::vector<TreeShape> f;
                f.reserve(t.size() + 1);
                f.push_back(h);
                for (auto& x : t) f.push_back(x);
                out.push_back(std::move(f));
            }
    }
    return out;
}

std::vector<TreeShape> all_trees(int v, int maxdeg) {
    std::vector<TreeShape> out;
    if (v <= 0) return out;
    for (int d = 0; d <= std::min(maxdeg, v - 1); ++d) {
        if (d == 0) {
            if (v == 1) out.push_back(TreeShape{});
            continue;
        }
        for (auto& f : all_forests(v - 1, d, maxdeg)) {
            TreeShape t;
            t.kids = f;
            out.push_back(std::move(t));
        }
    }
    return out;
}

struct LabeledForest {
    // per label j in 1..n+1: parent label (0 = root) and ordered children
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    std::vector<int> tree_of;  // component index 1..k+1 in discovery order
    int vertex_count = 0;
    int tree_count = 0;
};

// preorder labeling of a forest of shapes; children get increasing labels in
// preorder, trees left to right
void label_forest(const std::vector<TreeShape>& forest, LabeledForest& lf) {
    int n = 0;
    for (auto& t : forest) n += t.size();
    lf.vertex_count = n;
    lf.parent.assign(static_cast<std::size_t>(n) + 1, 0);
    lf.children.assign(static_cast<std::size_t>(n) + 1, {});
    lf.tree_of.assign(static_cast<std::size_t>(n) + 1, 0);
    lf.tree_count = static_cast<int>(forest.size());
    int next = 1;
    std::function<void(const TreeShape&, int, int)> walk = [&](const TreeShape& t, int parent,
                                                               int tree) {
        int me = next++;
        lf.parent[static_cast<std::size_t>(me)] = parent;
        lf.tree_of[static_cast<std::size_t>(me)] = tree;
        if (parent) lf.children[static_cast<std::size_t>(parent)].push_back(me);
        for (auto& k : t.kids) walk(k, me, tree);
    };
    for (std::size_t r = 0; r < forest.size(); ++r)
        walk(forest[r], 0, static_cast<int>(r) + 1);
}

// level of vertex j: children of vertices 1..j-1 that are > j, plus k+1-r_j,
// where r_j counts the trees containing at least one of 1..j (equivalently
// the roots with label <= j, since each root is the minimum of its tree)
int forest_level(const LabeledForest& lf, int j) {
    int count = 0;
    for (int v = 1; v < j; ++v)
        for (int c : lf.children[static_cast<std::size_t>(v)])
            if (c > j) ++count;
    int roots_le = 0;
    for (int v = 1; v <= j; ++v)
        if (lf.parent[static_cast<std::size_t>(v)] == 0) ++roots_le;
    return count + (lf.tree_count - roots_le);
}

// ---- increasing trees -----------------------------------------------------

struct IncForest {
    // vertex labels 1..N as they are inserted
    std::vector<int> parent;                      // 0 = root
    std::vector<int> edge_label;                  // label of edge to parent
    std::vector<std::vector<std::vector<int>>> kids;  // [vertex][edge label] -> ordered children
    int trees = 0;
};

}  // namespace

std::vector<LatticePath> enumerate_paths(Family family, int m, int start_height,
                                         int end_height, int length) {
    std::vector<LatticePath> out;
    if (start_height < 0 || end_height < 0 || length < 0) return out;
    std::vector<Step> acc;
    dfs_paths(family, m, start_height, length, end_height, acc, out, start_height);
    return out;
}

MPoly oracle_gen_poly(Family family, int m, int n, int k, const WeightSystem& w) {
    if (family == Family::J) return sum_weights(family, m, 0, k, n, w);
    return sum_weights(family, m, 0, (m + 1) * k, (m + 1) * n, w);
}

MPoly oracle_partial_poly(Family family, int m, int n, int ell, const WeightSystem& w) {
    if (family == Family::J) throw Error("oracle_partial_poly requires family S or T");
    return sum_weights(family, m, 0, ell, (m + 1) * n + ell, w);
}

MPoly forest_oracle(int m, int n, int k, const WeightSystem& j_weights) {
    MPoly acc;
    for (auto& forest : all_forests(n + 1, k + 1, m + 1)) {
        LabeledForest lf;
        label_forest(forest, lf);
        MPoly weight = MPoly::constant(1);
        for (int j = 1; j <= lf.vertex_count; ++j) {
            int c = static_cast<int>(lf.children[static_cast<std::size_t>(j)].size());
            if (c == 0) continue;
            int lev = forest_level(lf, j);
            weight *= j_weights.beta(c - 1, lev + c - 1);
        }
        acc += weight;
    }
    return acc;
}

MPoly schroeder_segment_weight(int m, int h0, int h1, const WeightSystem& w,
                               const std::function<bool(int)>& skip_start, bool use_delta) {
    MPoly acc;
    std::function<void(int, int, MPoly)> go = [&](int h, int left, MPoly weight) {
        if (left == 0) {
            if (h == h1) acc += weight;
            return;
        }
        if (h + left >= h1) go(h + 1, left - 1, weight);
        if (h - m >= 0) go(h - m, left - 1, weight * w.alpha(h));
        if (use_delta && left >= 2 && h - (m - 1) >= 0 && !skip_start(h))
            go(h - (m - 1), left - 2, weight * w.delta(h + 1));
    };
    go(h0, m + 1, MPoly::constant(1));
    return acc;
}

namespace {

MPoly elementary_weight_subsets(const std::vector<MPoly>& x, int d, bool zeros_only) {
    // sum over strictly increasing label sequences of length d
    MPoly acc;
    int mm = static_cast<int>(x.size());
    if (zeros_only) {
        if (d == 0) return MPoly::constant(1);
        if (d == 1) return x[0];
        return MPoly();
    }
    std::vector<int> pick;
    std::function<void(int)> go = [&](int from) {
        if (static_cast<int>(pick.size()) == d) {
            MPoly p = MPoly::constant(1);
            for (int i : pick) p *= x[static_cast<std::size_t>(i)];
            acc += p;
            return;
        }
        for (int i = from; i < mm; ++i) {
            pick.push_back(i);
            go(i + 1);
            pick.pop_back();
        }
    };
    go(0);
    return acc;
}

MPoly multiset_weight(const std::vector<MPoly>& x, int d, bool zeros_only) {
    // sum over weakly increasing label sequences of length d
    if (zeros_only) return x.empty() ? (d == 0 ? MPoly::constant(1) : MPoly()) : x[0].pow(static_cast<unsigned long>(d));
    MPoly acc;
    int mm = static_cast<int>(x.size());
    std::vector<int> pick;
    std::function<void(int)> go = [&](int from) {
        if (static_cast<int>(pick.size()) == d) {
            MPoly p = MPoly::constant(1);
            for (int i : pick) p *= x[static_cast<std::size_t>(i)];
            acc += p;
            return;
        }
        for (int i = from; i < mm; ++i) {
            pick.push_back(i);
            go(i);
            pick.pop_back();
        }
    };
    go(0);
    return acc;
}

MPoly ordered_tree_oracle(TreeKind kind, int m, int n, int k, const std::vector<MPoly>& x,
                          bool root_constraint) {
    bool ary = (kind == TreeKind::Ary);
    int maxdeg = ary ? m + 1 : n + 1;
    MPoly acc;
    for (auto& forest : all_forests(n + 1, k + 1, maxdeg)) {
        LabeledForest lf;
        label_forest(forest, lf);
        MPoly weight = MPoly::constant(1);
        bool dead = false;
        for (int j = 1; j <= lf.vertex_count && !dead; ++j) {
            int d = static_cast<int>(lf.children[static_cast<std::size_t>(j)].size());
            bool is_root = lf.parent[static_cast<std::size_t>(j)] == 0;
            MPoly f = ary ? elementary_weight_subsets(x, d, root_constraint && is_root)
                          : multiset_weight(x, d, root_constraint && is_root);
            if (f.is_zero() && d > 0) dead = true;
            weight *= f;
        }
        if (!dead) acc += weight;
    }
    return acc;
}

MPoly increasing_tree_oracle(TreeKind kind, int m, int n, int k, const std::vector<MPoly>& x,
                             const TreeOracleOptions& opts) {
    bool ary = (kind == TreeKind::IncreasingAry);
    int labels = ary ? m + 1 : m;
    int total = n + 1;
    MPoly acc;
    IncForest f;
    f.parent.assign(static_cast<std::size_t>(total) + 1, -1);
    f.edge_label.assign(static_cast<std::size_t>(total) + 1, -1);
    f.kids.assign(static_cast<std::size_t>(total) + 1,
                  std::vector<std::vector<int>>(static_cast<std::size_t>(labels)));
    auto weight_of = [&]() {
        MPoly w = MPoly::constant(1);
        for (int v = 2; v <= total; ++v) {
            int lbl = f.edge_label[static_cast<std::size_t>(v)];
            if (lbl >= 0) w *= x[static_cast<std::size_t>(lbl)];
        }
        if (!opts.level_weights.empty()) {
            LabeledForest lf;
            lf.vertex_count = total;
            lf.tree_count = k + 1;
            lf.parent.assign(static_cast<std::size_t>(total) + 1, 0);
            lf.children.assign(static_cast<std::size_t>(total) + 1, {});
            lf.tree_of.assign(static_cast<std::size_t>(total) + 1, 0);
            for (int v = 1; v <= total; ++v) {
                int p = f.parent[static_cast<std::size_t>(v)];
                lf.parent[static_cast<std::size_t>(v)] = p;
                if (p != 0) lf.children[static_cast<std::size_t>(p)].push_back(v);
            }
            for (int v = 1; v <= total; ++v) {
                int lev = forest_level(lf, v);
                if (lev >= static_cast<int>(opts.level_weights.size()))
                    throw MissingWeight("c", lev);
                w *= opts.level_weights[static_cast<std::size_t>(lev)];
            }
        }
        return w;
    };
    std::function<void(int, int)> insert = [&](int v, int trees) {
        if (v > total) {
            if (trees == k + 1) acc += weight_of();
            return;
        }
        int remaining = total - v + 1;
        // start a new tree
        if (trees < k + 1 && remaining >= (k + 1 - trees)) {
            f.parent[static_cast<std::size_t>(v)] = 0;
            f.edge_label[static_cast<std::size_t>(v)] = -1;
            insert(v + 1, trees + 1);
        }
        // attach to an existing vertex
        for (int u = 1; u < v; ++u) {
            for (int lbl = 0; lbl < labels; ++lbl) {
                if (opts.root_constraint && f.parent[static_cast<std::size_t>(u)] == 0 &&
                    lbl != 0)
                    continue;
                auto& slot = f.kids[static_cast<std::size_t>(u)][static_cast<std::size_t>(lbl)];
                if (ary) {
                    if (!slot.empty()) continue;
                    slot.push_back(v);
                    f.parent[static_cast<std::size_t>(v)] = u;
                    f.edge_label[static_cast<std::size_t>(v)] = lbl;
                    insert(v + 1, trees);
                    slot.pop_back();
                } else {
                    // any position among the existing same-label children
                    for (std::size_t pos = 0; pos <= slot.size(); ++pos) {
                        slot.insert(slot.begin() + static_cast<long>(pos), v);
                        f.parent[static_cast<std::size_t>(v)] = u;
                        f.edge_label[static_cast<std::size_t>(v)] = lbl;
                        insert(v + 1, trees);
                        slot.erase(slot.begin() + static_cast<long>(pos));
                    }
                }
            }
        }
    };
    insert(1, 0);
    if (!opts.level_weights.empty()) {
        MPoly divisor = MPoly::constant(1);
        for (int j = 0; j <= k; ++j) divisor *= opts.level_weights[static_cast<std::size_t>(j)];
        acc = acc.divide_exact(divisor);
    }
    return acc;
}

}  // namespace

MPoly tree_oracle(TreeKind kind, int m, int n, int k, const std::vector<MPoly>& x,
                  const TreeOracleOptions& opts) {
    int need = (kind == TreeKind::Ary || kind == TreeKind::IncreasingAry) ? m + 1 : m;
    if (static_cast<int>(x.size()) != need)
        throw ArityMismatch("tree_oracle expects " + std::to_string(need) + " edge weights, got " +
                            std::to_string(x.size()));
    if (kind == TreeKind::Ary || kind == TreeKind::MultiAry) {
        if (!opts.level_weights.empty())
            throw ArityMismatch("level weights apply to increasing kinds only");
        return ordered_tree_oracle(kind, m, n, k, x, opts.root_constraint);
    }
    return increasing_tree_oracle(kind, m, n, k, x, opts);
}

}  // namespace bcflab::paths
