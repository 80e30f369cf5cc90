#include "bcflab/prodmat.hpp"

#include <algorithm>
#include <functional>

#include "bcflab/error.hpp"
#include "bcflab/paths.hpp"
#include "bcflab/symfun.hpp"

namespace bcflab::prodmat {

namespace {

// One bidiagonal factor of the P^{(m)S} / P^{(m)S'} products. Entries are
// indexed from 0; the s-sequence from 1 as in the matrix displays.
struct Factor {
    bool lower;  // L(s_1,s_2,...) if true else U*(s_1,s_2,...)
    std::function<MPoly(long)> s;

    MPoly entry(long p, long q) const {
        if (lower) {
            if (q == p) return MPoly::constant(1);
            if (q == p - 1 && p >= 1) return s(p);
            return MPoly();
        }
        if (q == p) return s(p + 1);
        if (q == p + 1) return MPoly::constant(1);
        return MPoly();
    }
};

std::vector<Factor> stieltjes_factors(ContractKind kind, int m, const WeightSystem& w) {
    std::vector<Factor> fs;
    auto lower_t = [m, w](int t) {
        return Factor{true, [m, w, t](long r) { return w.alpha(m + t + (r - 1) * (m + 1)); }};
    };
    Factor ustar{false, [m, w](long r) { return w.alpha(m + (r - 1) * (m + 1)); }};
    if (kind == ContractKind::Odd) fs.push_back(ustar);
    for (int t = 1; t <= m; ++t) fs.push_back(lower_t(t));
    if (kind == ContractKind::Even) fs.push_back(ustar);
    return fs;
}

MPoly chain_entry(const std::vector<Factor>& fs, std::size_t t, long p, long target) {
    if (t == fs.size()) return p == target ? MPoly::constant(1) : MPoly();
    MPoly acc;
    const Factor& f = fs[t];
    for (long q : f.lower ? std::vector<long>{p, p - 1} : std::vector<long>{p, p + 1}) {
        if (q < 0) continue;
        MPoly e = f.entry(p, q);
        if (e.is_zero()) continue;
        MPoly rest = chain_entry(fs, t + 1, q, target);
        if (!rest.is_zero()) acc += e * rest;
    }
    return acc;
}

std::vector<MPoly> periodic_x(const WeightSystem& w, int m) {
    std::vector<MPoly> xs;
    for (int j = 0; j <= m; ++j) xs.push_back(w.alpha(m + j));
    return xs;
}

}  // namespace

MPoly production_entry(const ProductionSpec& spec, int i, int j) {
    int m = spec.m;
    switch (spec.kind) {
        case ProductionKind::SEven:
            return chain_entry(stieltjes_factors(ContractKind::Even, m, spec.weights), 0, i, j);
        case ProductionKind::SOdd:
            return chain_entry(stieltjes_factors(ContractKind::Odd, m, spec.weights), 0, i, j);
        case ProductionKind::RT:
            return paths::schroeder_segment_weight(
                m, (m + 1) * i, (m + 1) * j, spec.weights,
                [m](int h) { return (h + 1) % (m + 1) == 0; }, true);
        case ProductionKind::RTOdd:
            return paths::schroeder_segment_weight(
                m, (m + 1) * i + m, (m + 1) * j + m, spec.weights,
                [m](int h) { return (h + 1) % (m + 1) == m; }, true);
        case ProductionKind::J:
            if (j == i + 1) return MPoly::constant(1);
            if (j <= i && i - j <= m) return spec.weights.beta(i - j, i);
            return MPoly();
        case ProductionKind::PeriodicAZ: {
            auto xs = periodic_x(spec.weights, m);
            if (j == 0) {
                std::vector<MPoly> tail(xs.begin() + 1, xs.end());
                return xs[0] * elementary_symmetric(tail, i);
            }
            return elementary_symmetric(xs, i - j + 1);
        }
    }
    return MPoly();
}

PolyMatrix build_production(const ProductionSpec& spec) {
    if (spec.size < 1) throw Error("production matrix size must be >= 1");
    PolyMatrix p(spec.size, spec.size);
    for (int i = 0; i < spec.size; ++i)
        for (int j = 0; j < spec.size; ++j) {
            if (j > i + 1) continue;  // lower-Hessenberg by construction
            p.at(i, j) = production_entry(spec, i, j);
        }
    return p;
}

Triangle output_matrix(const PolyMatrix& P, int N) {
    if (P.rows() < N || P.cols() < N + 1)
        throw InsufficientMatrixSize("output_matrix needs " + std::to_string(N) + " rows and " +
                                     std::to_string(N + 1) + " cols, have " +
                                     std::to_string(P.rows()) + "x" + std::to_string(P.cols()));
    for (int i = 0; i < P.rows(); ++i) {
        for (int j = i + 2; j < P.cols(); ++j)
            if (!P.at(i, j).is_zero()) throw Error("production matrix is not lower-Hessenberg");
        if (i + 1 < P.cols() && !P.at(i, i + 1).is_one())
            throw Error("production matrix superdiagonal entry " + std::to_string(i) +
                        " is not 1");
    }
    Triangle t;
    t.family = Family::S;
    t.m = 1;
    t.N = N;
    t.rows.assign(static_cast<std::size_t>(N) + 1, {});
    std::vector<MPoly> row(1, MPoly::constant(1));
    t.rows[0] = row;
    for (int n = 1; n <= N; ++n) {
        std::vector<MPoly> next(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            MPoly acc;
            for (int i = std::max(0, k - 1); i < static_cast<int>(row.size()); ++i)
                if (!row[static_cast<std::size_t>(i)].is_zero() && !P.at(i, k).is_zero())
                    acc += row[static_cast<std::size_t>(i)] * P.at(i, k);
            next[static_cast<std::size_t>(k)] = std::move(acc);
        }
        row = next;
        t.rows[static_cast<std::size_t>(n)] = std::move(next);
    }
    return t;
}

WeightSystem contract(ContractKind kind, int m, const WeightSystem& s_weights) {
    if (s_weights.kind() != Family::S)
        throw Error("contract expects S-kind weights");
    auto fs = stieltjes_factors(kind, m, s_weights);
    return WeightSystem::j_closed(m, [fs](int ell, long i) {
        return chain_entry(fs, 0, i, i - ell);
    });
}

PolyMatrix toeplitz_Txi(const MPoly& xi, int size) {
    PolyMatrix t(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j <= i; ++j)
            t.at(i, j) = xi.pow(static_cast<unsigned long>(i - j));
    return t;
}

PolyMatrix conjugate_by_Txi(const PolyMatrix& P, const MPoly& xi, int size) {
    if (P.rows() < size || P.cols() < size + 1)
        throw TruncationUnsafe("conjugation to size " + std::to_string(size) + " needs " +
                               std::to_string(size) + "x" + std::to_string(size + 1) +
                               " of P materialized");
    for (int i = 0; i < P.rows(); ++i)
        for (int j = i + 2; j < P.cols(); ++j)
            if (!P.at(i, j).is_zero())
                throw TruncationUnsafe("matrix is not lower-Hessenberg; entries would be lost");
    // A = T_xi^{-1} P with T_xi^{-1} = L(-xi,-xi,...); then R = A T_xi.
    auto a = [&](int i, int j) {
        MPoly v = P.at(i, j);
        if (i >= 1) v -= xi * P.at(i - 1, j);
        return v;
    };
    PolyMatrix r(size, size);
    std::vector<MPoly> xpow(static_cast<std::size_t>(size) + 2);
    xpow[0] = MPoly::constant(1);
    for (std::size_t e = 1; e < xpow.size(); ++e) xpow[e] = xpow[e - 1] * xi;
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            MPoly acc;
            for (int k = j; k <= std::min(i + 1, P.cols() - 1); ++k) {
                MPoly aik = a(i, k);
                if (!aik.is_zero()) acc += aik * xpow[static_cast<std::size_t>(k - j)];
            }
            r.at(i, j) = std::move(acc);
        }
    return r;
}

namespace {

// Closed-form conjugates of the bidiagonal factors (materialized).
PolyMatrix conj_factor(const Factor& f, const MPoly& xi, int size) {
    PolyMatrix r(size, size);
    std::vector<MPoly> xpow(static_cast<std::size_t>(size) + 1);
    xpow[0] = MPoly::constant(1);
    for (std::size_t e = 1; e < xpow.size(); ++e) xpow[e] = xpow[e - 1] * xi;
    if (f.lower) {
        for (int i = 0; i < size; ++i) {
            r.at(i, i) = MPoly::constant(1);
            if (i >= 1) r.at(i, i - 1) = f.s(i);
            for (int j = 0; j < i - 1; ++j)
                r.at(i, j) = (f.s(i) - f.s(i - 1)) * xpow[static_cast<std::size_t>(i - j - 1)];
        }
    } else {
        for (int i = 0; i < size; ++i) {
            if (i + 1 < size) r.at(i, i + 1) = MPoly::constant(1);
            r.at(i, i) = (i == 0) ? f.s(1) + xi : f.s(i + 1);
            for (int j = 0; j < i; ++j)
                r.at(i, j) = (f.s(i + 1) - f.s(i)) * xpow[static_cast<std::size_t>(i - j)];
        }
    }
    return r;
}

}  // namespace

PolyMatrix conjugate_by_Txi(const ProductionSpec& spec, const MPoly& xi, int size) {
    std::vector<Factor> fs;
    switch (spec.kind) {
        case ProductionKind::SEven:
            fs = stieltjes_factors(ContractKind::Even, spec.m, spec.weights);
            break;
        case ProductionKind::SOdd:
            fs = stieltjes_factors(ContractKind::Odd, spec.m, spec.weights);
            break;
        case ProductionKind::PeriodicAZ: {
            // identical to SEven with period-(m+1) weights
            auto xs = periodic_x(spec.weights, spec.m);
            for (int t = 1; t <= spec.m; ++t) {
                MPoly v = xs[static_cast<std::size_t>(t)];
                fs.push_back(Factor{true, [v](long) { return v; }});
            }
            MPoly v0 = xs[0];
            fs.push_back(Factor{false, [v0](long) { return v0; }});
            break;
        }
        default: {
            // no recognized factorization: exact generic route on a larger block
            ProductionSpec wide = spec;
            wide.size = size + 1;
            return conjugate_by_Txi(build_production(wide), xi, size);
        }
    }
    int pad = size + static_cast<int>(fs.size()) + 1;
    PolyMatrix acc = conj_factor(fs[0], xi, pad);
    for (std::size_t t = 1; t < fs.size(); ++t) acc = acc * conj_factor(fs[t], xi, pad);
    return acc.topleft(size, size);
}

bool riordan_verify(const PolyMatrix& P, int N) {
    int rows = P.rows(), cols = P.cols();
    if (rows < N + 1 || cols < N + 1)
        throw InsufficientMatrixSize("riordan_verify needs an (N+1)x(N+1) block");
    for (int i = 0; i < rows; ++i)
        for (int j = i + 2; j < cols; ++j)
            if (!P.at(i, j).is_zero()) throw NotAZShape("not lower-Hessenberg");
    // Toeplitz away from column 0: P_{ij} = a_{i+1-j} for j >= 1
    std::vector<MPoly> a(static_cast<std::size_t>(rows));
    for (int d = 0; d < rows; ++d) a[static_cast<std::size_t>(d)] = P.at(d, 1);
    for (int i = 0; i < rows; ++i)
        for (int j = 1; j < cols; ++j) {
            MPoly expect = (i + 1 - j >= 0) ? a[static_cast<std::size_t>(i + 1 - j)] : MPoly();
            if (!(P.at(i, j) == expect)) throw NotAZShape("entries are not Toeplitz off column 0");
        }
    if (!a[0].is_one()) throw NotAZShape("A-sequence is not normalized (a_0 != 1)");
    SeriesTrunc A(N), Z(N);
    for (int d = 0; d <= N && d < rows; ++d) {
        A.set(d, a[static_cast<std::size_t>(d)]);
        Z.set(d, P.at(d, 0));
    }
    // g = t A(g) as a truncated fixed point; each pass settles one more order
    SeriesTrunc g(N);
    for (int pass = 0; pass <= N; ++pass) g = series_compose(A, g).shift(1);
    SeriesTrunc one = SeriesTrunc::one(N);
    SeriesTrunc f = series_div(one, one - series_compose(Z, g).shift(1));
    Triangle out = output_matrix(P, N);
    SeriesTrunc fg = f;
    for (int k = 0; k <= N; ++k) {
        for (int n = k; n <= N; ++n)
            if (!(out.at(n, k) == fg[n])) return false;
        fg = fg * g;
    }
    return true;
}

}  // namespace bcflab::prodmat
