#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcflab/bcf.hpp"
#include "bcflab/families.hpp"
#include "bcflab/paths.hpp"
#include "test_util.hpp"

using namespace bcflab;
using namespace bcflab::bcf;

namespace {

MPoly av(int i) { return MPoly::var("a" + std::to_string(i)); }

WeightSystem all_ones_s(int m) {
    return WeightSystem::s_closed(m, [](long) { return MPoly::constant(1); });
}

}  // namespace

TEST_CASE("triangle matches the paper's small displays") {
    auto t = compute_triangle(Family::S, 1, WeightSystem::s_generic(1), 3);
    CHECK(t.at(3, 0) ==
          av(1).pow(3) + 2 * (av(1) * av(1) * av(2)) + av(1) * av(2) * av(2) +
              av(1) * av(2) * av(3));
    for (int n = 0; n <= 3; ++n) CHECK(t.at(n, n) == MPoly::constant(1));
}

TEST_CASE("all-ones column zero") {
    auto t = compute_triangle(Family::S, 1, all_ones_s(1), 4);
    std::vector<long> want{1, 1, 2, 5, 14};
    for (int n = 0; n <= 4; ++n) CHECK(t.at(n, 0) == MPoly::constant(want[static_cast<std::size_t>(n)]));

    auto ones_t = WeightSystem::t_closed(
        2, [](long) { return MPoly::constant(1); }, [](long) { return MPoly::constant(1); });
    auto tt = compute_triangle(Family::T, 2, ones_t, 2);
    CHECK(tt.at(2, 0) == MPoly::constant(10));
    CHECK(MPoly::constant(families::mschroeder_count(2, 2)) == tt.at(2, 0));
}

TEST_CASE("parallel and serial DP agree") {
    for (auto family : {Family::S, Family::T, Family::J}) {
        int m = 2;
        WeightSystem w = family == Family::S   ? WeightSystem::s_generic(m)
                         : family == Family::T ? WeightSystem::t_generic(m)
                                               : WeightSystem::j_generic(m);
        auto a = compute_triangle(family, m, w, 4);
        auto b = compute_triangle_serial(family, m, w, 4);
        CHECK(a == b);
    }
}

TEST_CASE("oracle equivalence at small scale") {
    for (int m = 1; m <= 2; ++m) {
        auto ws = WeightSystem::s_generic(m);
        auto ts = compute_triangle(Family::S, m, ws, 4);
        auto wt = WeightSystem::t_generic(m);
        auto tt = compute_triangle(Family::T, m, wt, 3);
        auto wj = WeightSystem::j_generic(m);
        auto tj = compute_triangle(Family::J, m, wj, 4);
        for (int n = 0; n <= 4; ++n)
            for (int k = 0; k <= n; ++k) {
                CHECK(ts.at(n, k) == paths::oracle_gen_poly(Family::S, m, n, k, ws));
                if (n <= 3) CHECK(tt.at(n, k) == paths::oracle_gen_poly(Family::T, m, n, k, wt));
                CHECK(tj.at(n, k) == paths::oracle_gen_poly(Family::J, m, n, k, wj));
                CHECK(tj.at(n, k) == paths::forest_oracle(m, n, k, wj));
            }
    }
}

TEST_CASE("partial sequences") {
    for (int m = 1; m <= 2; ++m) {
        auto w = WeightSystem::s_generic(m);
        auto part0 = compute_partial(Family::S, m, w, 0, 4);
        auto tri = compute_triangle(Family::S, m, w, 5);
        for (int n = 0; n <= 4; ++n) CHECK(part0[static_cast<std::size_t>(n)] == tri.at(n, 0));

        // S_{n|m} = S_{n+1} / alpha_m
        auto partm = compute_partial(Family::S, m, w, m, 4);
        for (int n = 0; n <= 4; ++n)
            CHECK(partm[static_cast<std::size_t>(n)] == tri.at(n + 1, 0).divide_exact(av(m)));

        // oracle agreement for a few ells
        for (int ell = 0; ell <= m + 2; ++ell) {
            auto seq = compute_partial(Family::S, m, w, ell, 3);
            for (int n = 0; n <= 3; ++n)
                CHECK(seq[static_cast<std::size_t>(n)] ==
                      paths::oracle_partial_poly(Family::S, m, n, ell, w));
        }
    }
    // T partials against the oracle
    auto wt = WeightSystem::t_generic(2);
    for (int ell = 0; ell <= 2; ++ell) {
        auto seq = compute_partial(Family::T, 2, wt, ell, 3);
        for (int n = 0; n <= 3; ++n)
            CHECK(seq[static_cast<std::size_t>(n)] ==
                  paths::oracle_partial_poly(Family::T, 2, n, ell, wt));
    }
}

TEST_CASE("the l = m+1 Hankel combination has the -1 coefficient") {
    for (int m = 1; m <= 2; ++m) {
        auto w = WeightSystem::s_generic(m);
        auto seq = compute_partial(Family::S, m, w, m + 1, 2);
        MPoly minor = seq[0] * seq[2] - seq[1] * seq[1];
        Monomial mono;
        mono.e.emplace_back(VarTable::instance().intern("a" + std::to_string(m)), 1);
        mono.e.emplace_back(VarTable::instance().intern("a" + std::to_string(2 * m + 1)), 1);
        std::sort(mono.e.begin(), mono.e.end());
        CHECK(minor.coeff(mono) == Rat(-1));
    }
}

TEST_CASE("degenerate reductions") {
    // T at delta = 0 equals S
    for (int m = 1; m <= 2; ++m) {
        auto wt = WeightSystem::t_closed(
            m, [](long i) { return av(static_cast<int>(i)); }, [](long) { return MPoly(); });
        auto tt = compute_triangle(Family::T, m, wt, 4);
        auto ts = compute_triangle(Family::S, m, WeightSystem::s_generic(m), 4);
        for (int n = 0; n <= 4; ++n)
            for (int k = 0; k <= n; ++k) CHECK(tt.at(n, k) == ts.at(n, k));
    }
    // T_n^{(m)}(0, delta) = S_n^{(m-1)}(delta)
    for (int m = 2; m <= 3; ++m) {
        auto wt = WeightSystem::t_closed(
            m, [](long) { return MPoly(); },
            [](long i) { return MPoly::var("d" + std::to_string(i)); });
        auto tt = compute_triangle(Family::T, m, wt, 4);
        auto ws = WeightSystem::s_closed(m - 1, [m](long i) {
            // the (m-1)-S weights are the deltas shifted by one index
            return MPoly::var("d" + std::to_string(i + 1));
        });
        auto ts = compute_triangle(Family::S, m - 1, ws, 4);
        for (int n = 0; n <= 4; ++n) CHECK(tt.at(n, 0) == ts.at(n, 0));
    }
}

TEST_CASE("specialization commutes with the DP") {
    auto w = WeightSystem::s_generic(2);
    std::map<std::string, MPoly> sub{{"a2", MPoly::constant(1)},
                                     {"a3", MPoly::var("z")},
                                     {"a4", MPoly::constant(2)}};
    auto t = compute_triangle(Family::S, 2, w, 3);
    auto tsub = compute_triangle(Family::S, 2, w.substituted(sub), 3);
    for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= n; ++k) CHECK(t.at(n, k).substitute(sub) == tsub.at(n, k));
}

TEST_CASE("J specializes to S after reindexing t -> t^{m+1}") {
    for (int m = 1; m <= 2; ++m) {
        auto wj = WeightSystem::j_closed(m, [m](int ell, long i) {
            return ell == m ? av(static_cast<int>(i)) : MPoly();
        });
        auto tj = compute_triangle(Family::J, m, wj, 3 * (m + 1));
        auto ts = compute_triangle(Family::S, m, WeightSystem::s_generic(m), 3);
        for (int n = 0; n <= 3 * (m + 1); ++n) {
            if (n % (m + 1) == 0)
                CHECK(tj.at(n, 0) == ts.at(n / (m + 1), 0));
            else
                CHECK(tj.at(n, 0).is_zero());
        }
    }
}

TEST_CASE("embedding (1,2) with the periodic good set") {
    auto w = WeightSystem::s_generic(1);
    GoodSet good{[](long i) { return i >= 2 && i % 3 == 1; }};
    auto w2 = embed_weights(1, 2, good, w, 6);
    CHECK(w2.alpha(2) == av(1));
    CHECK(w2.alpha(3) == av(2));
    CHECK(w2.alpha(4).is_zero());
    CHECK(w2.alpha(5) == av(3));
    CHECK(w2.alpha(6) == av(4));
    CHECK(w2.alpha(7).is_zero());
    auto t1 = compute_triangle(Family::S, 1, w, 5);
    auto t2 = compute_triangle(Family::S, 2, w2, 5);
    for (int n = 0; n <= 5; ++n) CHECK(t1.at(n, 0) == t2.at(n, 0));
}

TEST_CASE("embedding rejects bad sets") {
    auto w = WeightSystem::s_generic(1);
    GoodSet contains_mp{[](long i) { return i % 3 == 2; }};  // contains m' = 2
    CHECK_THROWS_AS(embed_weights(1, 2, contains_mp, w, 4), BadGoodSet);
    GoodSet unbalanced{[](long i) { return i >= 4 && (i % 4 == 0 || i % 4 == 1); }};
    CHECK_THROWS_AS(embed_weights(1, 2, unbalanced, w, 4), BadGoodSet);
}

TEST_CASE("an aperiodic (1,2)-good set also embeds") {
    // blocks of one or two non-members alternating with single members:
    // non-members 2; member 3; non-members 4,5; member 6; non-members 7;
    // member 8; non-members 9,10; member 11; ... (pattern 1,2 repeating)
    auto member = [](long i) {
        if (i < 2) return false;
        long pos = i - 2;
        // pattern of segment lengths: 1,1, 2,1, 1,1, 2,1, ...
        long cycle = 5;  // 1 non + 1 mem + 2 non + 1 mem
        long r = pos % cycle;
        return r == 1 || r == 4;
    };
    auto w = WeightSystem::s_generic(1);
    auto w2 = embed_weights(1, 2, GoodSet{member}, w, 5);
    auto t1 = compute_triangle(Family::S, 1, w, 4);
    auto t2 = compute_triangle(Family::S, 2, w2, 4);
    for (int n = 0; n <= 4; ++n) CHECK(t1.at(n, 0) == t2.at(n, 0));
}

TEST_CASE("Thron embedding by residues") {
    auto w = WeightSystem::t_generic(1);
    auto w2 = embed_weights(1, 2, ThronResidues{{1}}, w, 5);
    auto t1 = compute_triangle(Family::T, 1, w, 4);
    auto t2 = compute_triangle(Family::T, 2, w2, 4);
    for (int n = 0; n <= 4; ++n) CHECK(t1.at(n, 0) == t2.at(n, 0));
}

TEST_CASE("Euler-Gauss verification") {
    // alpha = 0, g = 1
    auto zero = WeightSystem::s_closed(2, [](long) { return MPoly(); });
    std::vector<SeriesTrunc> g(6, SeriesTrunc::one(5));
    CHECK(euler_gauss_verify(2, g, zero, 5));

    // constant term != 1 is an error
    std::vector<SeriesTrunc> bad = g;
    bad[2].set(0, MPoly::constant(2));
    CHECK_THROWS_AS(euler_gauss_verify(2, bad, zero, 5), ConstantTermNotOne);

    // Eulerian-quasi-affine ladder per the g_{k,n} recurrence
    for (int m = 1; m <= 2; ++m) {
        int N = 5, K = 2 * m + 1;
        auto xs = testutil::vars("x", m + 1);
        auto alpha_fn = [m, xs](long j) -> MPoly {
            if (j < m) return MPoly();
            long f = (j + 1) / (m + 1);
            return xs[static_cast<std::size_t>((j + 1) % (m + 1))].scaled(Rat(f));
        };
        auto alpha = WeightSystem::s_closed(m, alpha_fn);
        std::vector<std::string> names;
        for (int i = 0; i <= m; ++i) names.push_back("x" + std::to_string(i));
        auto applyD = [&](const MPoly& f) {
            MPoly sum, acc;
            for (auto& x : xs) sum += x;
            for (std::size_t i = 0; i < names.size(); ++i) {
                MPoly d = f.derivative(names[i]);
                if (!d.is_zero()) acc += (sum - xs[i]) * xs[i] * d;
            }
            return acc;
        };
        // g_{k,n} = (D + sum_{i=1..m} alpha_{k+i}) g_{k,n-1} + g_{k-m,n}
        std::map<long, std::vector<MPoly>> gk;
        for (long k = -m; k <= -1; ++k)
            gk[k] = std::vector<MPoly>{MPoly::constant(1)};  // delta_{n0}
        for (long k = -m; k <= -1; ++k)
            gk[k].resize(static_cast<std::size_t>(N) + 1);
        for (long k = -m; k <= -1; ++k) gk[k][0] = MPoly::constant(1);
        for (long k = 0; k <= K; ++k) {
            std::vector<MPoly> cur(static_cast<std::size_t>(N) + 1);
            cur[0] = MPoly::constant(1);
            MPoly shift;
            for (int i = 1; i <= m; ++i) shift += alpha_fn(k + i);
            for (int n = 1; n <= N; ++n) {
                MPoly prev = cur[static_cast<std::size_t>(n - 1)];
                MPoly low = gk[k - m][static_cast<std::size_t>(n)];
                cur[static_cast<std::size_t>(n)] = applyD(prev) + shift * prev + low;
            }
            gk[k] = cur;
        }
        std::vector<SeriesTrunc> ladder;
        for (long k = -1; k <= K; ++k) {
            SeriesTrunc s(N);
            if (k == -1) {
                s.set(0, MPoly::constant(1));
            } else {
                for (int n = 0; n <= N; ++n) s.set(n, gk[k][static_cast<std::size_t>(n)]);
            }
            ladder.push_back(s);
        }
        CHECK(euler_gauss_verify(m, ladder, alpha, N));
    }
}
