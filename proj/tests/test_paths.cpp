#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bcflab/paths.hpp"
#include "test_util.hpp"

using namespace bcflab;
using namespace bcflab::paths;
using bcf::Family;
using bcf::WeightSystem;

TEST_CASE("path enumeration counts") {
    CHECK(enumerate_paths(Family::S, 1, 0, 0, 4).size() == 2);  // UUDD, UDUD
    CHECK(enumerate_paths(Family::S, 2, 0, 0, 6).size() == 3);  // Fuss-Catalan C_2^{(3)}
    CHECK(enumerate_paths(Family::S, 1, 0, 1, 4).empty());      // parity obstruction
    CHECK(enumerate_paths(Family::S, 1, 0, 0, 6).size() == 5);
    CHECK(enumerate_paths(Family::J, 1, 0, 0, 4).size() == 9);  // Motzkin m_4
}

TEST_CASE("paths stay in the mod-(m+1) grid") {
    for (auto& p : enumerate_paths(Family::T, 2, 0, 0, 6)) {
        int x = 0, h = p.start_height;
        for (auto& s : p.steps) {
            x += s.dx;
            h += s.dy;
            CHECK(x % 3 == h % 3);
            CHECK(h >= 0);
        }
    }
}

TEST_CASE("generating polynomial oracle") {
    auto w1 = WeightSystem::s_generic(1);
    MPoly a1 = MPoly::var("a1"), a2 = MPoly::var("a2"), a3 = MPoly::var("a3"),
          a4 = MPoly::var("a4");
    CHECK(oracle_gen_poly(Family::S, 1, 2, 0, w1) == a1 * a1 + a1 * a2);

    auto w2 = WeightSystem::s_generic(2);
    MPoly b2 = MPoly::var("a2"), b3 = MPoly::var("a3"), b4 = MPoly::var("a4");
    CHECK(oracle_gen_poly(Family::S, 2, 2, 0, w2) == b2 * b2 + b2 * b3 + b2 * b4);

    auto wt = WeightSystem::t_generic(2);
    CHECK(oracle_gen_poly(Family::T, 2, 1, 0, wt) == b2 + MPoly::var("d2"));
}

TEST_CASE("partial path oracle") {
    auto w2 = WeightSystem::s_generic(2);
    CHECK(oracle_partial_poly(Family::S, 2, 0, 2, w2) == MPoly::constant(1));

    // S^{(m)}_{1|l} = sum_{i=m}^{m+l} alpha_i for l > m
    for (int m = 1; m <= 3; ++m) {
        int ell = m + 2;
        auto w = WeightSystem::s_generic(m);
        MPoly want;
        for (int i = m; i <= m + ell; ++i) want += MPoly::var("a" + std::to_string(i));
        CHECK(oracle_partial_poly(Family::S, m, 1, ell, w) == want);
    }

    auto ones = WeightSystem::s_closed(1, [](long) { return MPoly::constant(1); });
    CHECK(oracle_partial_poly(Family::S, 1, 1, 1, ones) == MPoly::constant(2));
}

TEST_CASE("forest oracle") {
    auto wj = WeightSystem::j_generic(1);
    CHECK(forest_oracle(1, 1, 0, wj) == MPoly::var("b0_0"));
    MPoly b00 = MPoly::var("b0_0"), b11 = MPoly::var("b1_1");
    CHECK(forest_oracle(1, 2, 0, wj) == b00 * b00 + b11);
    for (int m = 1; m <= 3; ++m)
        for (int n = 0; n <= 4; ++n)
            CHECK(forest_oracle(m, n, n, WeightSystem::j_generic(m)) == MPoly::constant(1));
}

TEST_CASE("tree oracle: ary") {
    for (int m = 1; m <= 3; ++m) {
        auto x = testutil::vars("x", m + 1);
        MPoly want;
        for (auto& xi : x) want += xi;
        CHECK(tree_oracle(TreeKind::Ary, m, 1, 0, x) == want);
    }
}

TEST_CASE("tree oracle: multi-ary") {
    std::vector<MPoly> x{MPoly::var("x0")};
    CHECK(tree_oracle(TreeKind::MultiAry, 1, 2, 0, x) == 2 * (x[0] * x[0]));
}

TEST_CASE("tree oracle: increasing counts") {
    // increasing binary trees on n vertices number n!
    std::vector<MPoly> x = testutil::ones(2);
    Rat f(1);
    for (int v = 1; v <= 5; ++v) {
        if (v > 1) f *= v;
        CHECK(tree_oracle(TreeKind::IncreasingAry, 1, v - 1, 0, x) == MPoly::constant(f));
    }
    // increasing (r+1)-ary trees on n+1 vertices number F_{n+1}^{(r)}
    std::vector<MPoly> x3 = testutil::ones(3);
    Rat f2(1);
    for (int vtx = 1; vtx <= 4; ++vtx) {
        CHECK(tree_oracle(TreeKind::IncreasingAry, 2, vtx - 1, 0, x3) == MPoly::constant(f2));
        f2 *= 1 + 2 * vtx;
    }
}

TEST_CASE("tree oracle: increasing multi-ary count") {
    // increasing multi-m-ary trees on n+1 vertices: prod_{j<n} [m + j(m+1)]
    for (int m = 1; m <= 2; ++m) {
        Rat f(1);
        for (int n = 0; n <= 3; ++n) {
            auto x = testutil::ones(m);
            CHECK(tree_oracle(TreeKind::IncreasingMultiAry, m, n, 0, x) == MPoly::constant(f));
            f *= m + n * (m + 1);
        }
    }
}

TEST_CASE("reversal sanity for Lukasiewicz paths") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 5; ++n) {
            auto fwd = enumerate_paths(Family::J, m, 0, 0, n);
            // reversed paths use steps -1..+m; enumerate them directly
            long count = 0;
            std::function<void(int, int)> go = [&](int h, int left) {
                if (left == 0) {
                    if (h == 0) ++count;
                    return;
                }
                for (int dy = -1; dy <= m; ++dy)
                    if (h + dy >= 0) go(h + dy, left - 1);
            };
            go(0, n);
            CHECK(static_cast<long>(fwd.size()) == count);
            // and the bijection is literal reversal with negated steps
            std::set<std::vector<int>> seen;
            for (auto& p : fwd) {
                std::vector<int> rev;
                for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it)
                    rev.push_back(-it->dy);
                CHECK(seen.insert(rev).second);
            }
        }
}

TEST_CASE("missing weights surface as errors") {
    auto small = WeightSystem::s_table(1, {MPoly::constant(1)});  // only alpha_1
    CHECK_THROWS_AS(oracle_gen_poly(Family::S, 1, 2, 0, small), bcflab::MissingWeight);
}
