#include "bcflab/polymatrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "bcflab/error.hpp"

namespace bcflab {

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = MPoly::constant(1);
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product dimension mismatch");
    PolyMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (!o.at(k, j).is_zero()) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

PolyMatrix PolyMatrix::topleft(int r, int c) const {
    if (r > rows_ || c > cols_) throw Error("topleft block exceeds matrix");
    PolyMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = at(i, j);
    return m;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& rows,
                                 const std::vector<int>& cols) const {
    PolyMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    return m;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    return entries_ == o.entries_;
}

bool PolyMatrix::all_constant() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const MPoly& p) { return p.is_constant(); });
}

namespace {

MPoly det_cofactor_rec(const PolyMatrix& m, std::vector<int>& cols, int row) {
    int n = m.rows();
    if (row == n) return MPoly::constant(1);
    MPoly acc;
    for (std::size_t pos = 0; pos < cols.size(); ++pos) {
        int j = cols[pos];
        if (m.at(row, j).is_zero()) continue;
        std::vector<int> rest = cols;
        rest.erase(rest.begin() + static_cast<long>(pos));
        MPoly sub = det_cofactor_rec(m, rest, row + 1);
        MPoly term = m.at(row, j) * sub;
        if (pos % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

// Laplace expansion organized as a DP over column subsets, so each minor of
// the leading rows is computed once. No divisions; intermediates are true
// minors of the input.
MPoly det_laplace_dp(const PolyMatrix& m) {
    int n = m.rows();
    if (n == 0) return MPoly::constant(1);
    std::vector<MPoly> cur(1, MPoly::constant(1));  // subsets of size k, colex-indexed
    std::vector<std::uint32_t> subsets(1, 0);
    for (int k = 0; k < n; ++k) {
        // enumerate subsets of size k+1
        std::vector<std::uint32_t> next_subsets;
        for (std::uint32_t s = 0; s < (1u << n); ++s)
            if (std::popcount(s) == k + 1) next_subsets.push_back(s);
        std::vector<MPoly> next(next_subsets.size());
        std::vector<int> index_of(1u << n, -1);
        for (std::size_t i = 0; i < next_subsets.size(); ++i)
            index_of[next_subsets[i]] = static_cast<int>(i);
        for (std::size_t si = 0; si < subsets.size(); ++si) {
            if (cur[si].is_zero()) continue;
            std::uint32_t s = subsets[si];
            for (int j = 0; j < n; ++j) {
                if (s & (1u << j)) continue;
                if (m.at(k, j).is_zero()) continue;
                std::uint32_t t = s | (1u << j);
                int pos = std::popcount(t & ((1u << j) - 1));
                MPoly term = cur[si] * m.at(k, j);
                if ((pos + k) % 2 == 1) term = -term;
                next[static_cast<std::size_t>(index_of[t])] += term;
            }
        }
        cur = std::move(next);
        subsets = std::move(next_subsets);
    }
    return cur[0];
}

Rat det_numeric(const PolyMatrix& m) {
    int n = m.rows();
    if (n == 0) return Rat(1);
    std::vector<std::vector<Int>> a(static_cast<std::size_t>(n),
                                    std::vector<Int>(static_cast<std::size_t>(n)));
    Int scale(1);
    for (int i = 0; i < n; ++i) {
        Int l(1);
        for (int j = 0; j < n; ++j) {
            Rat c = m.at(i, j).constant_value();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
        }
        for (int j = 0; j < n; ++j) {
            Rat c = m.at(i, j).constant_value() * Rat(l);
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c.get_num();
        }
        scale *= l;
    }
    int sign = 1;
    Int prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        auto uk = static_cast<std::size_t>(k);
        if (a[uk][uk] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[static_cast<std::size_t>(i)][uk] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return Rat(0);
            std::swap(a[uk], a[static_cast<std::size_t>(piv)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            auto ui = static_cast<std::size_t>(i);
            for (int j = k + 1; j < n; ++j) {
                auto uj = static_cast<std::size_t>(j);
                Int num = a[ui][uj] * a[uk][uk] - a[ui][uk] * a[uk][uj];
                mpz_divexact(a[ui][uj].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[ui][uk] = 0;
        }
        prev = a[uk][uk];
    }
    Rat d(a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)]);
    d /= Rat(scale);
    if (sign < 0) d = -d;
    d.canonicalize();
    return d;
}

}  // namespace

MPoly det_cofactor(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw NotSquare("determinant of " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + " matrix");
    std::vector<int> cols(static_cast<std::size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) cols[static_cast<std::size_t>(j)] = j;
    return det_cofactor_rec(m, cols, 0);
}

MPoly det_bareiss(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw NotSquare("determinant of " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + " matrix");
    int n = m.rows();
    if (n == 0) return MPoly::constant(1);
    PolyMatrix a = m;
    int sign = 1;
    MPoly prev = MPoly::constant(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a.at(i, k).is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) return MPoly();
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                MPoly num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = num.divide_exact(prev);
            }
            a.at(i, k) = MPoly();
        }
        prev = a.at(k, k);
    }
    MPoly d = a.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

MPoly det_fraction_free(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw NotSquare("determinant of " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + " matrix");
    int n = m.rows();
    if (n == 0) return MPoly::constant(1);
    if (m.all_constant()) return MPoly::constant(det_numeric(m));
    if (n <= 5) return det_laplace_dp(m);
    try {
        return det_bareiss(m);
    } catch (const DivisionFailed&) {
        return det_laplace_dp(m);
    }
}

}  // namespace bcflab
