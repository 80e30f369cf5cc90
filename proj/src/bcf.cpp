#include "bcflab/bcf.hpp"

#include <algorithm>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bcflab/error.hpp"

namespace bcflab::bcf {

std::vector<MPoly> Triangle::column(int k) const {
    std::vector<MPoly> out;
    for (int n = 0; n <= N; ++n) out.push_back(n >= k ? at(n, k) : MPoly());
    return out;
}

namespace {

// One DP layer: weight sums over partial paths ending at each height, at a
// fixed abscissa. Schroeder long steps span two abscissas, so the previous
// two layers are kept.
struct Mode {
    Family family;
    int m;
    bool parallel;
};

void check_kind(Family family, const WeightSystem& w) {
    if (w.kind() != family)
        throw Error(std::string("weight system kind ") + family_name(w.kind()) +
                    " does not match family " + family_name(family));
}

// Gather-form transition so the cells of a layer are independent:
//   S/T: next[h] = prev[h-1] + alpha_{h+m} prev[h+m] (+ delta_{h+m} prev2[h+m-1])
//   J:   next[h] = prev[h-1] + sum_l beta_{h+l}^{(l)} prev[h+l]
std::vector<MPoly> advance(const Mode& mode, const WeightSystem& w,
                           const std::vector<MPoly>& prev, const std::vector<MPoly>& prev2,
                           int max_h) {
    int m = mode.m;
    std::vector<MPoly> next(static_cast<std::size_t>(max_h) + 1);
    auto cell = [&](int h) {
        MPoly acc;
        if (h >= 1 && h - 1 < static_cast<int>(prev.size()) && !prev[static_cast<std::size_t>(h - 1)].is_zero())
            acc += prev[static_cast<std::size_t>(h - 1)];
        if (mode.family == Family::J) {
            for (int l = 0; l <= m; ++l) {
                int src = h + l;
                if (src < static_cast<int>(prev.size()) && !prev[static_cast<std::size_t>(src)].is_zero())
                    acc += w.beta(l, src) * prev[static_cast<std::size_t>(src)];
            }
        } else {
            int src = h + m;
            if (src < static_cast<int>(prev.size()) && !prev[static_cast<std::size_t>(src)].is_zero())
                acc += w.alpha(src) * prev[static_cast<std::size_t>(src)];
            if (mode.family == Family::T) {
                int lsrc = h + m - 1;
                if (lsrc < static_cast<int>(prev2.size()) &&
                    !prev2[static_cast<std::size_t>(lsrc)].is_zero())
                    acc += w.delta(lsrc + 1) * prev2[static_cast<std::size_t>(lsrc)];
            }
        }
        next[static_cast<std::size_t>(h)] = std::move(acc);
    };
    if (mode.parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
        for (int h = 0; h <= max_h; ++h) cell(h);
#else
        for (int h = 0; h <= max_h; ++h) cell(h);
#endif
    } else {
        for (int h = 0; h <= max_h; ++h) cell(h);
    }
    return next;
}

Triangle triangle_dp(const Mode& mode, const WeightSystem& w, int N) {
    check_kind(mode.family, w);
    int m = mode.m;
    int cols = (mode.family == Family::J) ? N : (m + 1) * N;
    Triangle t;
    t.family = mode.family;
    t.m = m;
    t.N = N;
    t.rows.assign(static_cast<std::size_t>(N) + 1, {});
    std::vector<MPoly> prev2, prev;
    prev.push_back(MPoly::constant(1));
    auto record = [&](int x, const std::vector<MPoly>& layer) {
        int step = (mode.family == Family::J) ? 1 : (m + 1);
        if (x % step != 0) return;
        int n = x / step;
        if (n > N) return;
        auto& row = t.rows[static_cast<std::size_t>(n)];
        row.resize(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            int h = (mode.family == Family::J) ? k : (m + 1) * k;
            row[static_cast<std::size_t>(k)] =
                h < static_cast<int>(layer.size()) ? layer[static_cast<std::size_t>(h)] : MPoly();
        }
    };
    record(0, prev);
    for (int x = 1; x <= cols; ++x) {
        int max_h = std::min(x, cols - 0);  // heights never exceed the abscissa
        std::vector<MPoly> next = advance(mode, w, prev, prev2, max_h);
        prev2 = std::move(prev);
        prev = std::move(next);
        record(x, prev);
    }
    return t;
}

}  // namespace

Triangle compute_triangle(Family family, int m, const WeightSystem& weights, int N) {
    return triangle_dp({family, m, true}, weights, N);
}

Triangle compute_triangle_serial(Family family, int m, const WeightSystem& weights, int N) {
    return triangle_dp({family, m, false}, weights, N);
}

std::vector<MPoly> compute_partial(Family family, int m, const WeightSystem& weights, int ell,
                                   int N) {
    if (family == Family::J) throw Error("compute_partial requires family S or T");
    if (ell < 0) throw Error("compute_partial requires ell >= 0");
    check_kind(family, weights);
    Mode mode{family, m, true};
    int cols = (m + 1) * N + ell;
    std::vector<MPoly> out;
    std::vector<MPoly> prev2, prev;
    prev.push_back(MPoly::constant(1));
    auto record = [&](int x, const std::vector<MPoly>& layer) {
        if (x < ell || (x - ell) % (m + 1) != 0) return;
        int n = (x - ell) / (m + 1);
        if (n > N) return;
        out.push_back(ell < static_cast<int>(layer.size()) ? layer[static_cast<std::size_t>(ell)]
                                                           : MPoly());
    };
    record(0, prev);
    for (int x = 1; x <= cols; ++x) {
        std::vector<MPoly> next = advance(mode, weights, prev, prev2, x);
        prev2 = std::move(prev);
        prev = std::move(next);
        record(x, prev);
    }
    return out;
}

WeightSystem embed_weights(int m, int m_prime, const EmbedSelector& selector,
                           const WeightSystem& weights, int window_N) {
    if (!(1 <= m && m < m_prime)) throw BadGoodSet("requires 1 <= m < m'");
    std::function<bool(long)> in_set;
    if (const auto* g = std::get_if<GoodSet>(&selector)) {
        in_set = g->contains;
    } else {
        const auto& J = std::get<ThronResidues>(selector).residues;
        if (weights.kind() != Family::T)
            throw BadGoodSet("residue selector applies to T-kind weights");
        if (static_cast<int>(J.size()) != m_prime - m)
            throw BadGoodSet("residue set must have cardinality m'-m");
        for (long j : J)
            if (j < 1 || j > m_prime - 1)
                throw BadGoodSet("residues must lie in {1,..,m'-1}");
        long mp = m_prime;
        auto Jcopy = J;
        in_set = [Jcopy, mp](long i) { return i >= mp && Jcopy.count(((i % mp) + mp) % mp) > 0; };
    }
    long lo = m_prime, hi = static_cast<long>(m_prime) * std::max(window_N, 1);
    if (in_set(m_prime)) throw BadGoodSet("condition (a) violated: m' is in the set");
    for (long j = lo; j <= hi; ++j) {
        if (in_set(j)) continue;
        int cnt = 0;
        for (long d = 1; d <= m_prime; ++d)
            if (in_set(j + d)) ++cnt;
        if (cnt != m_prime - m)
            throw BadGoodSet("condition (b) violated at index " + std::to_string(j) + ": " +
                             std::to_string(cnt) + " of the next m' indices are in the set");
    }
    // alpha'_i = 0 on the set; otherwise the next original weight in order
    auto position = [in_set, m_prime, m](long i) -> long {
        long count = 0;  // non-members in [m', i)
        for (long j = m_prime; j < i; ++j)
            if (!in_set(j)) ++count;
        return m + count;
    };
    if (weights.kind() == Family::S) {
        WeightSystem base = weights;
        return WeightSystem::s_closed(m_prime, [base, in_set, position](long i) {
            return in_set(i) ? MPoly() : base.alpha(position(i));
        });
    }
    if (weights.kind() == Family::T) {
        WeightSystem base = weights;
        return WeightSystem::t_closed(
            m_prime,
            [base, in_set, position](long i) {
                return in_set(i) ? MPoly() : base.alpha(position(i));
            },
            [base, in_set, position](long i) {
                return in_set(i) ? MPoly() : base.delta(position(i));
            });
    }
    throw BadGoodSet("embedding applies to S- or T-kind weights");
}

bool euler_gauss_verify(int m, const std::vector<SeriesTrunc>& g, const WeightSystem& alpha,
                        int N) {
    if (g.size() < static_cast<std::size_t>(m) + 2)
        throw Error("euler_gauss_verify needs g_k for k = -1..K with K >= m");
    int K = static_cast<int>(g.size()) - 2;
    for (const auto& gk : g)
        if (!(gk[0] == MPoly::constant(1)))
            throw ConstantTermNotOne("euler_gauss_verify: constant term is " + gk[0].str());
    for (int k = 0; k <= K - m; ++k) {
        const SeriesTrunc& gk = g[static_cast<std::size_t>(k) + 1];
        const SeriesTrunc& gk1 = g[static_cast<std::size_t>(k)];
        const SeriesTrunc& gkm = g[static_cast<std::size_t>(k + m) + 1];
        SeriesTrunc lhs = gk - gk1;
        SeriesTrunc rhs = (SeriesTrunc::constant(gkm.order(), alpha.alpha(k + m)) * gkm).shift(1);
        int ord = std::min({N, lhs.order(), rhs.order()});
        for (int n = 0; n <= ord; ++n)
            if (!(lhs[n] == rhs[n])) return false;
    }
    // ratio check up to the order both inputs are supplied to
    int ord = std::min({N, g[0].order(), g[1].order()});
    SeriesTrunc ratio = series_div(g[1], g[0]);
    Triangle t = compute_triangle(Family::S, m, alpha, ord);
    for (int n = 0; n <= ord; ++n)
        if (!(ratio[n] == t.at(n, 0))) return false;
    return true;
}

}  // namespace bcflab::bcf
