#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bcflab/bcf.hpp"
#include "bcflab/families.hpp"
#include "bcflab/hyper.hpp"
#include "test_util.hpp"

using namespace bcflab;
using namespace bcflab::hyper;
using bcf::compute_triangle;
using bcf::Family;

namespace {

Rat draw_param(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(1, 7), den(1, 4);
    return Rat(num(rng), den(rng));
}

Rat draw_b(std::mt19937& rng) {
    // keep b away from 1 and from nonpositive integers
    std::uniform_int_distribution<int> num(5, 15), den(2, 4);
    int d = den(rng);
    int n = num(rng);
    if (n % d == 0) ++n;
    return Rat(n, d);
}

}  // namespace

TEST_CASE("hypergeometric series basics") {
    auto f = hyper_series(HyperParams::ordinary_rat({Rat(1), Rat(1)}, {}), 4);
    std::vector<long> fact{1, 1, 2, 6, 24};
    for (int n = 0; n <= 4; ++n)
        CHECK(f[n] == MPoly::constant(fact[static_cast<std::size_t>(n)]));

    MPoly a = MPoly::var("a");
    auto g = hyper_series(HyperParams::ordinary({a}, {}), 2);
    CHECK(g[1] == a);
    CHECK(g[2] == (a * (a + MPoly::constant(1))).scaled(Rat(1, 2)));

    CHECK_THROWS_AS(hyper_series(HyperParams::ordinary_rat({}, {Rat(-2)}), 4),
                    PoleWithinTruncation);
}

TEST_CASE("contiguous relations") {
    // A-shift on 2F0 with symbolic parameters (the rF0 special case)
    MPoly a1 = MPoly::var("a1"), a2 = MPoly::var("a2");
    auto p = HyperParams::ordinary({a1, a2}, {});
    CHECK(contiguous_verify(Relation::AShift, p, 1, 0, 8));
    CHECK(contiguous_verify(Relation::RF0Special, p, 2, 0, 8));

    // AB-shift on 2F1 at the spec's rational draw
    auto p21 = HyperParams::ordinary_rat({Rat(1, 2), Rat(1, 3)}, {Rat(5, 2)});
    CHECK(contiguous_verify(Relation::ABShift, p21, 1, 1, 10));
    CHECK(contiguous_verify(Relation::ABShift, p21, 2, 1, 10));
    CHECK(contiguous_verify(Relation::BShift, p21, 1, 0, 10));
    CHECK(contiguous_verify(Relation::AShift, p21, 2, 0, 10));

    // q-analog at q = 1/2
    auto pq = HyperParams::basic({Rat(2), Rat(3)}, {Rat(5)}, Rat(1, 2));
    CHECK(contiguous_verify(Relation::QABShift, pq, 1, 1, 8));
    CHECK(contiguous_verify(Relation::QABShift, pq, 2, 1, 8));
}

TEST_CASE("rF0 weights and verification") {
    // m = 2, a = (1,1,1): alpha = 1,1,2,4,4,6,9,9,12
    auto p = HyperParams::ordinary_rat({Rat(1), Rat(1), Rat(1)}, {});
    auto w = ratio_weights(RatioKind::RF0, 3, 0, p);
    std::vector<long> want{1, 1, 2, 4, 4, 6, 9, 9, 12};
    for (int i = 0; i < 9; ++i)
        CHECK(w.alpha(2 + i) == MPoly::constant(want[static_cast<std::size_t>(i)]));

    // m = 1, a = (a, 1): alpha = a, 1, a+1, 2, a+2, 3, ...
    MPoly a = MPoly::var("a");
    auto p2 = HyperParams::ordinary({a, MPoly::constant(1)}, {});
    auto w2 = ratio_weights(RatioKind::RF0, 2, 0, p2);
    CHECK(w2.alpha(1) == a);
    CHECK(w2.alpha(2) == MPoly::constant(1));
    CHECK(w2.alpha(3) == a + MPoly::constant(1));
    CHECK(w2.alpha(4) == MPoly::constant(2));
    CHECK(w2.alpha(5) == a + MPoly::constant(2));

    // the ratio itself: (n!)^2 for m = 2 at all ones
    CHECK(ratio_verify(RatioKind::RF0, 3, 0, p, 6));
    auto tri = compute_triangle(Family::S, 2, w, 6);
    Rat f(1);
    for (int n = 0; n <= 6; ++n) {
        if (n) f *= n;
        CHECK(tri.at(n, 0) == MPoly::constant(f * f));
    }
}

TEST_CASE("rF0 ratio is symmetric in a_1..a_m") {
    auto xs = testutil::vars("a", 3);
    auto p = HyperParams::ordinary({xs[0], xs[1], xs[2]}, {});
    auto w = ratio_weights(RatioKind::RF0, 3, 0, p);
    auto tri = compute_triangle(Family::S, 2, w, 4);
    for (int n = 0; n <= 4; ++n) {
        auto swapped = tri.at(n, 0).substitute({{"a0", xs[1]}, {"a1", xs[0]}});
        CHECK(tri.at(n, 0) == swapped);
    }
}

TEST_CASE("rF0 product of Stirling cycle polynomials") {
    for (int m = 1; m <= 2; ++m) {
        std::vector<MPoly> as = testutil::vars("a", m);
        as.push_back(MPoly::constant(1));  // a_{m+1} = 1
        auto p = HyperParams::ordinary(as, {});
        auto w = ratio_weights(RatioKind::RF0, m + 1, 0, p);
        auto tri = compute_triangle(Family::S, m, w, 5);
        for (int n = 0; n <= 5; ++n) {
            MPoly prod = MPoly::constant(1);
            for (int i = 0; i < m; ++i)
                prod *= families::stirling_cycle(n, as[static_cast<std::size_t>(i)],
                                                 MPoly::constant(1));
            CHECK(tri.at(n, 0) == prod);
        }
    }
}

TEST_CASE("first ratio across the grid") {
    std::mt19937 rng(42);
    for (int r = 1; r <= 4; ++r)
        for (int s = 1; s <= 3; ++s) {
            if (std::max(r - 1, s) > 3 || std::max(r - 1, s) < 1) continue;
            for (int draw = 0; draw < 2; ++draw) {
                std::vector<Rat> a, b;
                for (int i = 0; i < r; ++i) a.push_back(draw_param(rng));
                for (int i = 0; i < s; ++i) b.push_back(draw_b(rng));
                auto p = HyperParams::ordinary_rat(a, b);
                CAPTURE(r);
                CAPTURE(s);
                CHECK(ratio_verify(RatioKind::First, r, s, p, 6));
            }
        }
}

TEST_CASE("second ratio across the grid") {
    std::mt19937 rng(43);
    for (int r = 1; r <= 4; ++r)
        for (int s = 0; s <= 3; ++s) {
            if (r == 1 && s == 0) continue;
            if (std::max(r - 1, s) > 3 || std::max(r - 1, s) < 1) continue;
            for (int draw = 0; draw < 2; ++draw) {
                std::vector<Rat> a, b;
                for (int i = 0; i < r; ++i) a.push_back(draw_param(rng));
                for (int i = 0; i < s; ++i) b.push_back(draw_b(rng));
                auto p = HyperParams::ordinary_rat(a, b);
                CAPTURE(r);
                CAPTURE(s);
                CHECK(ratio_verify(RatioKind::Second, r, s, p, 6));
            }
        }
}

TEST_CASE("third ratio across the grid") {
    std::mt19937 rng(44);
    for (int r = 0; r <= 3; ++r)
        for (int s = 1; s <= 3; ++s) {
            if (std::max(r, s) > 3) continue;
            for (int draw = 0; draw < 2; ++draw) {
                std::vector<Rat> a, b;
                for (int i = 0; i < r; ++i) a.push_back(draw_param(rng));
                for (int i = 0; i < s; ++i) b.push_back(draw_b(rng));
                auto p = HyperParams::ordinary_rat(a, b);
                CAPTURE(r);
                CAPTURE(s);
                CHECK(ratio_verify(RatioKind::Third, r, s, p, 6));
            }
        }
}

TEST_CASE("third ratio weights for 0Fm") {
    std::vector<Rat> b{Rat(3, 2), Rat(5, 2)};
    auto p = HyperParams::ordinary_rat({}, b);
    auto w = ratio_weights(RatioKind::Third, 0, 2, p);
    Rat want = Rat(1) / ((b[1] - 1) * b[0] * b[1]);
    CHECK(w.alpha(2) == MPoly::constant(want));
    CHECK(ratio_verify(RatioKind::Third, 0, 2, p, 6));
    // positivity under the stated conditions b_1..b_{m-1} > 0, b_m > 1
    for (int i = 0; i < 8; ++i) CHECK(w.alpha(2 + i).constant_value() > 0);
}

TEST_CASE("q-first ratio (Heine and beyond)") {
    std::mt19937 rng(45);
    for (int m = 1; m <= 2; ++m) {
        for (int draw = 0; draw < 2; ++draw) {
            std::vector<Rat> a, b;
            for (int i = 0; i < m + 1; ++i) a.push_back(draw_param(rng));
            for (int i = 0; i < m; ++i) b.push_back(Rat(3 + 2 * i));
            auto p = HyperParams::basic(a, b, Rat(1, 2));
            CAPTURE(m);
            CHECK(ratio_verify(RatioKind::QFirst, m + 1, m, p, 6));
        }
    }
}

TEST_CASE("Euler-Gauss ladders for the hypergeometric families") {
    std::mt19937 rng(46);
    for (int m = 1; m <= 2; ++m) {
        // m+1Fm
        std::vector<Rat> a, b;
        for (int i = 0; i < m + 1; ++i) a.push_back(draw_param(rng));
        for (int i = 0; i < m; ++i) b.push_back(draw_b(rng));
        auto p = HyperParams::ordinary_rat(a, b);
        auto g = ratio_gk_ladder(RatioKind::First, m + 1, m, p, 2 * m + 2, 6);
        CHECK(bcf::euler_gauss_verify(m, g, ratio_weights(RatioKind::First, m + 1, m, p), 6));
        // m+1Fs with s < m
        if (m == 2) {
            auto ps = HyperParams::ordinary_rat({a[0], a[1], a[2]}, {b[0]});
            auto gs = ratio_gk_ladder(RatioKind::First, 3, 1, ps, 6, 6);
            CHECK(bcf::euler_gauss_verify(2, gs, ratio_weights(RatioKind::First, 3, 1, ps), 6));
            // rFm with r < m+1
            auto pr = HyperParams::ordinary_rat({a[0]}, {b[0], draw_b(rng)});
            auto gr = ratio_gk_ladder(RatioKind::First, 1, 2, pr, 6, 6);
            CHECK(bcf::euler_gauss_verify(2, gr, ratio_weights(RatioKind::First, 1, 2, pr), 6));
        }
        // q case
        std::vector<Rat> qb;
        for (int i = 0; i < m; ++i) qb.push_back(Rat(3 + 2 * i));
        auto pq = HyperParams::basic(a, qb, Rat(1, 2));
        auto gq = ratio_gk_ladder(RatioKind::QFirst, m + 1, m, pq, 2 * m + 2, 6);
        CHECK(bcf::euler_gauss_verify(m, gq, ratio_weights(RatioKind::QFirst, m + 1, m, pq), 6));
    }
}

TEST_CASE("log-derivative oracle for 0Fm") {
    for (int m = 1; m <= 3; ++m) {
        std::vector<Rat> b;
        for (int i = 0; i < m; ++i) b.push_back(Rat(3 + 2 * i, 2));
        // W = 0Fm(b+1)/0Fm(b) both as a series quotient and as the log derivative
        std::vector<Rat> b1 = b;
        for (auto& v : b1) v += 1;
        auto direct = series_div(hyper_series(HyperParams::ordinary_rat({}, b1), 8),
                                 hyper_series(HyperParams::ordinary_rat({}, b), 8));
        auto logd = log_derivative_ratio_0Fs(b, 8);
        CHECK(direct == logd);
    }
}

TEST_CASE("first-ratio weights satisfy the nonnegativity conditions numerically") {
    // Corollary conditions: b real, b_1..b_{s-1} > 0, b_s > 1, 0 <= a_i <= min b
    std::mt19937 rng(47);
    for (int trial = 0; trial < 5; ++trial) {
        int m = 2, s = 2;
        std::vector<Rat> b{Rat(7, 2), Rat(9, 4)};
        std::vector<Rat> a;
        for (int i = 0; i < m + 1; ++i)
            a.push_back(Rat(1 + trial, 2));  // all <= min(b) = 9/4 for trial <= 3
        if (a[0] > Rat(9, 4)) continue;
        auto p = HyperParams::ordinary_rat(a, b);
        auto w = ratio_weights(RatioKind::First, m + 1, s, p);
        for (int i = 0; i < 10; ++i) CHECK(w.alpha(m + i).constant_value() >= 0);
    }
}
