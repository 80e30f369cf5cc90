#include "bcflab/totalpos.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bcflab/error.hpp"

namespace bcflab::totalpos {

namespace {

long long binom_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// lexicographically idx-th k-subset of {0..n-1}
std::vector<int> unrank_subset(long long idx, int n, int k) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k));
    int v = 0;
    for (int picked = 0; picked < k; ++picked) {
        while (true) {
            long long block = binom_ll(n - 1 - v, k - 1 - picked);
            if (idx < block) break;
            idx -= block;
            ++v;
        }
        out.push_back(v++);
    }
    return out;
}

// integer Bareiss determinant sign test on a submatrix of a scaled matrix
int int_minor_sign(const std::vector<std::vector<Int>>& a, const std::vector<int>& rows,
                   const std::vector<int>& cols) {
    int n = static_cast<int>(rows.size());
    std::vector<std::vector<Int>> b(static_cast<std::size_t>(n),
                                    std::vector<Int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                a[static_cast<std::size_t>(rows[static_cast<std::size_t>(i)])]
                 [static_cast<std::size_t>(cols[static_cast<std::size_t>(j)])];
    int sign = 1;
    Int prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        auto uk = static_cast<std::size_t>(k);
        if (b[uk][uk] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (b[static_cast<std::size_t>(i)][uk] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(b[uk], b[static_cast<std::size_t>(piv)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            auto ui = static_cast<std::size_t>(i);
            for (int j = k + 1; j < n; ++j) {
                auto uj = static_cast<std::size_t>(j);
                Int num = b[ui][uj] * b[uk][uk] - b[ui][uk] * b[uk][uj];
                mpz_divexact(b[ui][uj].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            b[ui][uk] = 0;
        }
        prev = b[uk][uk];
    }
    auto& d = b[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return sign * sgn(d);
}

// Symbolic scan: minors are built layer by layer, expanding along the row
// with the fewest terms and reusing the shared subminors of the previous
// layer. Layer k-1 is dropped once layer k is done, so the peak footprint is
// two layers of minors.
TPReport scan_symbolic(const PolyMatrix& M, int r, const TPOptions& opts, bool parallel) {
    TPReport rep;
    rep.order = r;
    int kmax = std::min({r, M.rows(), M.cols()});
    const int R = M.rows(), C = M.cols();

    std::vector<MPoly> prev;  // layer k-1, indexed rowRank * ncol + colRank
    long long done_before = 0;
    for (int k = 1; k <= kmax; ++k) {
        long long nrow = binom_ll(R, k), ncol = binom_ll(C, k);
        long long total = nrow * ncol;
        long long prev_ncol = binom_ll(C, k - 1);
        std::vector<MPoly> cur(static_cast<std::size_t>(total));
        std::vector<std::vector<int>> rowsets(static_cast<std::size_t>(nrow)),
            colsets(static_cast<std::size_t>(ncol));
        for (long long i = 0; i < nrow; ++i)
            rowsets[static_cast<std::size_t>(i)] = unrank_subset(i, R, k);
        for (long long j = 0; j < ncol; ++j)
            colsets[static_cast<std::size_t>(j)] = unrank_subset(j, C, k);
        std::vector<long long> rank_of_rowset, rank_of_colset;
        // ranks of (k-1)-subsets by bitmask for subminor lookup
        std::vector<long long> comb_rank_row(1u << R, -1), comb_rank_col(1u << C, -1);
        if (k >= 2) {
            long long pr = binom_ll(R, k - 1);
            for (long long i = 0; i < pr; ++i) {
                auto s = unrank_subset(i, R, k - 1);
                std::uint32_t mask = 0;
                for (int v : s) mask |= 1u << v;
                comb_rank_row[mask] = i;
            }
            for (long long j = 0; j < prev_ncol; ++j) {
                auto s = unrank_subset(j, C, k - 1);
                std::uint32_t mask = 0;
                for (int v : s) mask |= 1u << v;
                comb_rank_col[mask] = j;
            }
        }
        auto compute_one = [&](long long idx) {
            const auto& I = rowsets[static_cast<std::size_t>(idx / ncol)];
            const auto& J = colsets[static_cast<std::size_t>(idx % ncol)];
            if (k == 1) return M.at(I[0], J[0]);
            // pivot row: fewest total terms across the columns of J
            int pivot_pos = 0;
            std::size_t best = SIZE_MAX;
            for (int p = 0; p < k; ++p) {
                std::size_t wt = 0;
                for (int j : J) wt += M.at(I[static_cast<std::size_t>(p)], j).term_count();
                if (wt < best) {
                    best = wt;
                    pivot_pos = p;
                }
            }
            int prow = I[static_cast<std::size_t>(pivot_pos)];
            std::uint32_t imask = 0;
            for (int v : I) imask |= 1u << v;
            std::uint32_t jmask = 0;
            for (int v : J) jmask |= 1u << v;
            long long subrow = comb_rank_row[imask & ~(1u << prow)];
            MPoly acc;
            for (int t = 0; t < k; ++t) {
                const MPoly& e = M.at(prow, J[static_cast<std::size_t>(t)]);
                if (e.is_zero()) continue;
                long long subcol =
                    comb_rank_col[jmask & ~(1u << J[static_cast<std::size_t>(t)])];
                const MPoly& sub = prev[static_cast<std::size_t>(subrow * prev_ncol + subcol)];
                if (sub.is_zero()) continue;
                MPoly term = e * sub;
                if ((pivot_pos + t) % 2 == 1) term = -term;
                acc += term;
            }
            return acc;
        };
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (parallel && k >= 2)
#endif
        for (long long idx = 0; idx < total; ++idx) {
            cur[static_cast<std::size_t>(idx)] = compute_one(idx);
            if (opts.progress && idx % 16 == 0)
#ifdef _OPENMP
#pragma omp critical
#endif
                std::fprintf(stderr, "tp-check: size %d, minor %lld/%lld\n", k, idx, total);
        }
        for (long long idx = 0; idx < total; ++idx) {
            if (!cur[static_cast<std::size_t>(idx)].coeffwise_nonneg()) {
                rep.violated = true;
                rep.checked = done_before + idx + 1;
                TPWitness w;
                w.rows = rowsets[static_cast<std::size_t>(idx / ncol)];
                w.cols = colsets[static_cast<std::size_t>(idx % ncol)];
                w.minor = cur[static_cast<std::size_t>(idx)];
                rep.witness = std::move(w);
                if (opts.early_exit) return rep;
            }
            if (rep.violated) break;
        }
        if (rep.violated) return rep;
        done_before += total;
        prev = std::move(cur);
    }
    rep.checked = done_before;
    return rep;
}

TPReport scan(const PolyMatrix& M, int r, const TPOptions& opts, bool parallel) {
    TPReport rep;
    rep.order = r;
    int kmax = std::min({r, M.rows(), M.cols()});

    bool numeric = M.all_constant();
    if (!numeric) {
        if (M.rows() > 30 || M.cols() > 30)
            throw Error("symbolic tp-check supports matrices up to 30x30");
        return scan_symbolic(M, r, opts, parallel);
    }
    std::vector<std::vector<Int>> a;
    if (numeric) {
        Int lcm(1);
        for (int i = 0; i < M.rows(); ++i)
            for (int j = 0; j < M.cols(); ++j) {
                Rat c = M.at(i, j).constant_value();
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
            }
        a.assign(static_cast<std::size_t>(M.rows()),
                 std::vector<Int>(static_cast<std::size_t>(M.cols())));
        for (int i = 0; i < M.rows(); ++i)
            for (int j = 0; j < M.cols(); ++j) {
                Rat c = M.at(i, j).constant_value() * Rat(lcm);
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c.get_num();
            }
    }

    auto minor_ok = [&](const std::vector<int>& rows, const std::vector<int>& cols) {
        if (numeric) return int_minor_sign(a, rows, cols) >= 0;
        return det_fraction_free(M.submatrix(rows, cols)).coeffwise_nonneg();
    };

    const long long NONE = std::numeric_limits<long long>::max();
    long long done_before = 0;
    for (int k = 1; k <= kmax; ++k) {
        long long nrow = binom_ll(M.rows(), k), ncol = binom_ll(M.cols(), k);
        long long total = nrow * ncol;
        long long bad = NONE;
        const long long block = 4096;
        for (long long base = 0; base < total; base += block) {
            if (bad != NONE && opts.early_exit) break;
            long long hi = std::min(total, base + block);
            long long local_bad = NONE;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) reduction(min : local_bad) if (parallel)
#endif
            for (long long idx = base; idx < hi; ++idx) {
                auto rows = unrank_subset(idx / ncol, M.rows(), k);
                auto cols = unrank_subset(idx % ncol, M.cols(), k);
                if (!minor_ok(rows, cols)) local_bad = std::min(local_bad, idx);
            }
            bad = std::min(bad, local_bad);
            if (opts.progress && (base / block) % 64 == 0)
                std::fprintf(stderr, "tp-check: size %d, %lld/%lld minors\n", k, hi, total);
        }
        if (bad != NONE) {
            rep.violated = true;
            rep.checked = done_before + bad + 1;
            TPWitness w;
            w.rows = unrank_subset(bad / ncol, M.rows(), k);
            w.cols = unrank_subset(bad % ncol, M.cols(), k);
            w.minor = det_fraction_free(M.submatrix(w.rows, w.cols));
            rep.witness = std::move(w);
            return rep;
        }
        done_before += total;
    }
    rep.checked = done_before;
    return rep;
}

}  // namespace

PolyMatrix hankel_matrix(const std::vector<MPoly>& seq, int size, int shift) {
    long need = 2L * (size - 1) + shift;
    if (shift < 0 || need >= static_cast<long>(seq.size()))
        throw IndexOutOfRange("hankel_matrix needs sequence indices up to " +
                              std::to_string(need) + ", have " + std::to_string(seq.size()));
    PolyMatrix h(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            h.at(i, j) = seq[static_cast<std::size_t>(i + j + shift)];
    return h;
}

TPReport check_tp(const PolyMatrix& M, int r, const TPOptions& opts) {
    if (r < 1) throw Error("check_tp requires r >= 1");
    return scan(M, r, opts, opts.parallel);
}

TPReport check_tp_serial(const PolyMatrix& M, int r, const TPOptions& opts) {
    if (r < 1) throw Error("check_tp requires r >= 1");
    return scan(M, r, opts, false);
}

bool hankel_factorization_check(const PolyMatrix& P, int N) {
    if (N < 1) throw Error("hankel_factorization_check requires N >= 1");
    int ext = 0;
    for (int i = 0; i < P.rows(); ++i)
        for (int j = 0; j < P.cols(); ++j)
            if (!P.at(i, j).is_zero()) ext = std::max(ext, j - i);
    long need = 1 + static_cast<long>(2 * N - 2) * std::max(ext, 0);
    if (P.rows() < need || P.cols() < need)
        throw InsufficientMatrixSize("need a " + std::to_string(need) + "-sized block of P");
    int dim = static_cast<int>(need);
    // A_n = (P^n) row 0; w_n = (P^n) column 0
    std::vector<std::vector<MPoly>> A(static_cast<std::size_t>(2 * N - 1)),
        W(static_cast<std::size_t>(N));
    std::vector<MPoly> row(static_cast<std::size_t>(dim)), col(static_cast<std::size_t>(dim));
    row[0] = MPoly::constant(1);
    col[0] = MPoly::constant(1);
    A[0] = row;
    W[0] = col;
    for (int n = 1; n <= 2 * N - 2; ++n) {
        std::vector<MPoly> nxt(static_cast<std::size_t>(dim));
        for (int j = 0; j < dim; ++j) {
            MPoly acc;
            for (int i = 0; i < dim; ++i)
                if (!row[static_cast<std::size_t>(i)].is_zero() && !P.at(i, j).is_zero())
                    acc += row[static_cast<std::size_t>(i)] * P.at(i, j);
            nxt[static_cast<std::size_t>(j)] = std::move(acc);
        }
        row = std::move(nxt);
        A[static_cast<std::size_t>(n)] = row;
    }
    for (int n = 1; n <= N - 1; ++n) {
        std::vector<MPoly> nxt(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) {
            MPoly acc;
            for (int j = 0; j < dim; ++j)
                if (!col[static_cast<std::size_t>(j)].is_zero() && !P.at(i, j).is_zero())
                    acc += P.at(i, j) * col[static_cast<std::size_t>(j)];
            nxt[static_cast<std::size_t>(i)] = std::move(acc);
        }
        col = std::move(nxt);
        W[static_cast<std::size_t>(n)] = col;
    }
    for (int n = 0; n < N; ++n)
        for (int np = 0; np < N; ++np) {
            MPoly lhs = A[static_cast<std::size_t>(n + np)][0];
            MPoly rhs;
            for (int k = 0; k < dim; ++k)
                if (!A[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)].is_zero() &&
                    !W[static_cast<std::size_t>(np)][static_cast<std::size_t>(k)].is_zero())
                    rhs += A[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] *
                           W[static_cast<std::size_t>(np)][static_cast<std::size_t>(k)];
            if (!(lhs == rhs)) return false;
        }
    return true;
}

}  // namespace bcflab::totalpos
