#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bcflab/families.hpp"
#include "bcflab/prodmat.hpp"
#include "bcflab/symfun.hpp"
#include "test_util.hpp"

using namespace bcflab;
using namespace bcflab::prodmat;
using bcf::compute_triangle;
using bcf::Family;
using bcf::WeightSystem;

namespace {

MPoly av(int i) { return MPoly::var("a" + std::to_string(i)); }

ProductionSpec seven(int m, WeightSystem w, int size) {
    return {ProductionKind::SEven, m, std::move(w), size};
}

// production matrix of a materialized unit-lower-triangular A: A^{-1} Delta A
PolyMatrix invert_ult(const PolyMatrix& A) {
    int n = A.rows();
    PolyMatrix inv = PolyMatrix::identity(n);
    for (int j = 0; j < n; ++j)
        for (int i = j + 1; i < n; ++i) {
            MPoly acc;
            for (int k = j; k < i; ++k) acc += A.at(i, k) * inv.at(k, j);
            inv.at(i, j) = -acc;
        }
    return inv;
}

PolyMatrix production_of(const PolyMatrix& A) {
    int n = A.rows();
    PolyMatrix delta(n, n);
    for (int i = 0; i + 1 < n; ++i) delta.at(i, i + 1) = MPoly::constant(1);
    return invert_ult(A) * delta * A;
}

}  // namespace

TEST_CASE("even production matrix entries match the paper displays") {
    auto P = build_production(seven(1, WeightSystem::s_generic(1), 4));
    CHECK(P.at(0, 0) == av(1));
    CHECK(P.at(0, 1) == MPoly::constant(1));
    CHECK(P.at(1, 0) == av(1) * av(2));
    CHECK(P.at(1, 1) == av(2) + av(3));
    CHECK(P.at(2, 0).is_zero());
    CHECK(P.at(2, 1) == av(3) * av(4));
    CHECK(P.at(2, 2) == av(4) + av(5));

    auto P2 = build_production(seven(2, WeightSystem::s_generic(2), 4));
    CHECK(P2.at(0, 0) == av(2));
    CHECK(P2.at(1, 0) == av(2) * av(3) + av(2) * av(4));
    CHECK(P2.at(1, 1) == av(3) + av(4) + av(5));
    CHECK(P2.at(2, 0) == av(2) * av(4) * av(6));
    CHECK(P2.at(2, 1) == av(4) * av(6) + av(5) * av(6) + av(5) * av(7));
    CHECK(P2.at(2, 2) == av(6) + av(7) + av(8));
}

TEST_CASE("odd production matrix entries match the paper displays") {
    auto P = build_production({ProductionKind::SOdd, 1, WeightSystem::s_generic(1), 4});
    CHECK(P.at(0, 0) == av(1) + av(2));
    CHECK(P.at(1, 0) == av(2) * av(3));
    CHECK(P.at(1, 1) == av(3) + av(4));

    auto P2 = build_production({ProductionKind::SOdd, 2, WeightSystem::s_generic(2), 4});
    CHECK(P2.at(0, 0) == av(2) + av(3) + av(4));
    CHECK(P2.at(1, 0) == av(3) * av(5) + av(4) * av(5) + av(4) * av(6));
    CHECK(P2.at(1, 1) == av(5) + av(6) + av(7));
    CHECK(P2.at(2, 0) == av(4) * av(6) * av(8));
}

TEST_CASE("PeriodicAZ equals SEven on the periodic weights") {
    for (int m = 1; m <= 3; ++m) {
        auto xs = testutil::vars("x", m + 1);
        auto w = families::periodic_weights(m, xs);  // alpha_{m+j} = x_j
        auto az = build_production({ProductionKind::PeriodicAZ, m, w, 5});
        auto se = build_production(seven(m, w, 5));
        CHECK(az == se);
    }
}

TEST_CASE("output matrix basics") {
    PolyMatrix P(6, 6);
    for (int i = 0; i < 6; ++i) {
        P.at(i, i) = MPoly::constant(1);
        if (i + 1 < 6) P.at(i, i + 1) = MPoly::constant(1);
        if (i >= 1) P.at(i, i - 1) = MPoly::constant(1);
    }
    auto tri = output_matrix(P, 4);
    std::vector<long> motzkin{1, 1, 2, 4, 9};
    for (int n = 0; n <= 4; ++n)
        CHECK(tri.at(n, 0) == MPoly::constant(motzkin[static_cast<std::size_t>(n)]));

    CHECK_THROWS(output_matrix(PolyMatrix::identity(5), 3));  // zero superdiagonal
    CHECK_THROWS_AS(output_matrix(P, 6), InsufficientMatrixSize);
}

TEST_CASE("output of the S production matrix is the S triangle") {
    for (int m = 1; m <= 2; ++m) {
        auto w = WeightSystem::s_generic(m);
        auto P = build_production(seven(m, w, 6));
        auto out = output_matrix(P, 5);
        auto tri = compute_triangle(Family::S, m, w, 5);
        for (int n = 0; n <= 5; ++n)
            for (int k = 0; k <= n; ++k) CHECK(out.at(n, k) == tri.at(n, k));
        // Catalan cross-check at all ones
        auto ones = WeightSystem::s_closed(m, [](long) { return MPoly::constant(1); });
        auto outc = output_matrix(build_production(seven(m, ones, 6)), 4);
        if (m == 1) {
            std::vector<long> cat{1, 1, 2, 5, 14};
            for (int n = 0; n <= 4; ++n)
                CHECK(outc.at(n, 0) == MPoly::constant(cat[static_cast<std::size_t>(n)]));
        }
    }
}

TEST_CASE("restricted Thron production matrix reproduces the restricted T triangle") {
    for (int m = 1; m <= 2; ++m) {
        auto w = WeightSystem::t_generic(m);
        auto P = build_production({ProductionKind::RT, m, w, 5});
        auto out = output_matrix(P, 4);
        auto restricted = WeightSystem::t_closed(
            m, [](long i) { return MPoly::var("a" + std::to_string(i)); },
            [m](long i) {
                if (i % (m + 1) == 0) return MPoly();
                return MPoly::var("d" + std::to_string(i));
            });
        auto tri = compute_triangle(Family::T, m, restricted, 4);
        for (int n = 0; n <= 4; ++n)
            for (int k = 0; k <= n; ++k) CHECK(out.at(n, k) == tri.at(n, k));
    }
}

TEST_CASE("even contraction reproduces the S triangle through the J DP") {
    for (int m = 1; m <= 2; ++m) {
        auto w = WeightSystem::s_generic(m);
        auto beta = contract(ContractKind::Even, m, w);
        CHECK(beta.kind() == Family::J);
        auto tj = compute_triangle(Family::J, m, beta, 4);
        auto ts = compute_triangle(Family::S, m, w, 4);
        for (int n = 0; n <= 4; ++n)
            for (int k = 0; k <= n; ++k) CHECK(tj.at(n, k) == ts.at(n, k));
    }
    auto b = contract(ContractKind::Even, 1, WeightSystem::s_generic(1));
    CHECK(b.beta(1, 1) == av(1) * av(2));
    CHECK(b.beta(0, 1) == av(2) + av(3));
}

TEST_CASE("odd contraction gives S_n = alpha_m J_{n-1}") {
    for (int m = 1; m <= 2; ++m) {
        auto w = WeightSystem::s_generic(m);
        auto beta = contract(ContractKind::Odd, m, w);
        auto tj = compute_triangle(Family::J, m, beta, 4);
        auto ts = compute_triangle(Family::S, m, w, 5);
        for (int n = 1; n <= 5; ++n) CHECK(ts.at(n, 0) == av(m) * tj.at(n - 1, 0));
    }
    auto b = contract(ContractKind::Odd, 1, WeightSystem::s_generic(1));
    CHECK(b.beta(0, 0) == av(1) + av(2));
    CHECK(b.beta(1, 1) == av(2) * av(3));
}

TEST_CASE("odd contraction of factorized weights has elementary-symmetric entries") {
    // alpha_{m+j+(m+1)k} = b_k x_j  =>  P^{S'}_{i,j} = b_j...b_i e_{i-j+1}(x)
    int m = 2;
    auto xs = testutil::vars("x", m + 1);
    auto bs = testutil::vars("b", 6);
    auto w = WeightSystem::s_closed(m, [m, xs, bs](long i) {
        long d = i - m;
        return bs[static_cast<std::size_t>(d / (m + 1))] *
               xs[static_cast<std::size_t>(d % (m + 1))];
    });
    auto P = build_production({ProductionKind::SOdd, m, w, 4});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j <= i; ++j) {
            MPoly want = elementary_symmetric(xs, i - j + 1);
            for (int t = j; t <= i; ++t) want *= bs[static_cast<std::size_t>(t)];
            CHECK(P.at(i, j) == want);
        }
}

TEST_CASE("Txi conjugation closed forms") {
    MPoly xi = MPoly::var("xi");
    auto w = families::periodic_weights(1, {MPoly::var("s"), MPoly::var("s")});
    ProductionSpec spec{ProductionKind::SEven, 1, w, 6};
    auto direct = conjugate_by_Txi(build_production(seven(1, w, 7)), xi, 5);
    auto closed = conjugate_by_Txi(spec, xi, 5);
    CHECK(direct == closed);

    // periodic production matrix: P(x1..xm; x0) -> P(x1..xm; x0+xi, x0)
    for (int m = 1; m <= 2; ++m) {
        auto xs = testutil::vars("x", m + 1);
        auto wp = families::periodic_weights(m, xs);
        ProductionSpec ps{ProductionKind::PeriodicAZ, m, wp, 8};
        auto conj = conjugate_by_Txi(ps, xi, 5);
        std::vector<MPoly> tail(xs.begin() + 1, xs.end());
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                MPoly want;
                if (j == 0)
                    want = (xs[0] + xi) * elementary_symmetric(tail, i);
                else if (j <= i + 1)
                    want = elementary_symmetric(xs, i - j + 1);
                CHECK(conj.at(i, j) == want);
            }
        auto generic =
            conjugate_by_Txi(build_production({ProductionKind::PeriodicAZ, m, wp, 6}), xi, 5);
        CHECK(conj == generic);
    }

    PolyMatrix small = build_production(seven(1, WeightSystem::s_generic(1), 4));
    CHECK_THROWS_AS(conjugate_by_Txi(small, xi, 4), TruncationUnsafe);
}

TEST_CASE("riordan verification") {
    for (int m = 1; m <= 2; ++m) {
        auto xs = testutil::vars("x", m + 1);
        auto wp = families::periodic_weights(m, xs);
        auto P = build_production({ProductionKind::PeriodicAZ, m, wp, 6});
        CHECK(riordan_verify(P, 5));
    }
    // Catalan case: a = (1,1,0,...), z = (1,0,...)
    PolyMatrix C(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 1; j < 6; ++j) {
            int d = i + 1 - j;
            C.at(i, j) = (d == 0 || d == 1) ? MPoly::constant(1) : MPoly();
        }
    C.at(0, 0) = MPoly::constant(1);
    CHECK(riordan_verify(C, 5));
    auto out = output_matrix(C, 5);
    CHECK(out.at(5, 1) == MPoly::constant(5));  // binomial output array

    PolyMatrix bad(5, 5);
    for (int i = 0; i < 5; ++i) {
        if (i + 1 < 5) bad.at(i, i + 1) = MPoly::constant(1);
        bad.at(i, i) = MPoly::constant(1);
        if (i >= 1) bad.at(i, i - 1) = MPoly::constant(i);
    }
    CHECK_THROWS_AS(riordan_verify(bad, 4), NotAZShape);
}

TEST_CASE("production of a product is the conjugated production") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> d(-3, 3);
    int n = 5;
    auto random_ult = [&]() {
        PolyMatrix A = PolyMatrix::identity(n);
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < i; ++j) A.at(i, j) = MPoly::constant(d(rng));
        return A;
    };
    for (int trial = 0; trial < 5; ++trial) {
        PolyMatrix A = random_ult(), B = random_ult();
        PolyMatrix PAB = production_of(A * B);
        PolyMatrix want = invert_ult(B) * production_of(A) * B;
        // the last row and column feel the truncation; compare the interior
        CHECK(PAB.topleft(n - 1, n - 1) == want.topleft(n - 1, n - 1));
    }
}

TEST_CASE("odd restricted Thron contraction (experimental) by DP equivalence") {
    for (int m = 1; m <= 2; ++m) {
        auto w = WeightSystem::t_generic(m);
        auto P = build_production({ProductionKind::RTOdd, m, w, 5});
        auto beta = WeightSystem::j_closed(m, [P](int ell, long i) {
            return P.at(static_cast<int>(i), static_cast<int>(i - ell));
        });
        auto tj = compute_triangle(Family::J, m, beta, 3);
        auto restricted = WeightSystem::t_closed(
            m, [](long i) { return MPoly::var("a" + std::to_string(i)); },
            [m](long i) {
                if (i % (m + 1) == m) return MPoly();
                return MPoly::var("d" + std::to_string(i));
            });
        auto tt = compute_triangle(Family::T, m, restricted, 4);
        for (int n = 1; n <= 4; ++n) CHECK(tt.at(n, 0) == av(m) * tj.at(n - 1, 0));
    }
}
