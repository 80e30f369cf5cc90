#include "bcflab/hyper.hpp"

#include <algorithm>

#include "bcflab/bcf.hpp"
#include "bcflab/error.hpp"

namespace bcflab::hyper {

namespace {

long ceil_div(long p, long q) {  // q > 0
    long d = p / q, r = p % q;
    return d + (r > 0 ? 1 : 0);
}

long pos_mod(long a, long mo) { return ((a % mo) + mo) % mo; }

Rat rat_of(const MPoly& p, const char* what) {
    if (!p.is_constant())
        throw ArityMismatch(std::string("parameter '") + what +
                            "' must be an exact rational here");
    return p.constant_value();
}

// The index bookkeeping shared by every ratio family. 1-based parameter
// indices; k is the "time" of the Euler-Gauss ladder.
struct Indexer {
    int m, r, s;
    std::vector<MPoly> a;  // size r
    std::vector<Rat> b;    // size s

    MPoly aik(int i, long k) const {
        return a[static_cast<std::size_t>(i - 1)] +
               MPoly::constant(Rat(ceil_div(k + 1 - i, m + 1)));
    }
    MPoly ahat(int i, long k) const {
        return a[static_cast<std::size_t>(i - 1)] +
               MPoly::constant(Rat(ceil_div(k + 1 - i - (m + 1 - r), m + 1)));
    }
    // third-ratio variant: the numerator list has m (not m+1) slots, so the
    // relabeling shift is m-r
    MPoly ahat3(int i, long k) const {
        return a[static_cast<std::size_t>(i - 1)] +
               MPoly::constant(Rat(ceil_div(k + 1 - i - (m - r), m + 1)));
    }
    Rat bik(int i, long k) const {
        return b[static_cast<std::size_t>(i - 1)] + Rat(ceil_div(k + 1 - i, m));
    }
    Rat bhat(int i, long k) const {
        return b[static_cast<std::size_t>(i - 1)] + Rat(ceil_div(k + 1 - i - (m - s), m));
    }

    int active_a_index(long k) const { return static_cast<int>(pos_mod(k - 1, m + 1)) + 1; }
    int active_b_index(long k) const { return static_cast<int>(pos_mod(k - 1, m)) + 1; }
    int active_ahat_index(long k) const {
        return static_cast<int>(pos_mod(k - 1 - (m + 1 - r), m + 1)) + 1;
    }
    int active_ahat3_index(long k) const {
        return static_cast<int>(pos_mod(k - 1 - (m - r), m + 1)) + 1;
    }
    int active_bhat_index(long k) const {
        return static_cast<int>(pos_mod(k - 1 - (m - s), m)) + 1;
    }

    MPoly active_a(long k) const { return aik(active_a_index(k), k); }
    MPoly active_ahat(long k) const { return ahat(active_ahat_index(k), k); }
    MPoly active_ahat3(long k) const { return ahat3(active_ahat3_index(k), k); }
    Rat active_b(long k) const { return bik(active_b_index(k), k); }
    Rat active_bhat(long k) const { return bhat(active_bhat_index(k), k); }
};

Indexer make_indexer(int m, const HyperParams& p, bool want_rational_a) {
    Indexer ix;
    ix.m = m;
    ix.r = p.r;
    ix.s = p.s;
    ix.a = p.a;
    ix.b = p.b;
    if (want_rational_a)
        for (auto& a : ix.a) (void)rat_of(a, "a");
    return ix;
}

MPoly first_ratio_alpha(const Indexer& ix, long k) {
    int m = ix.m, r = ix.r, s = ix.s;
    if (r >= s + 1) {
        // m+1Fs with s <= m (s == m is the plain m+1Fm case)
        long res = pos_mod(k - 1, m) + 1;  // residue classes written 1..m
        bool plain = (res <= m - s);
        MPoly num = MPoly::constant(1);
        for (int i = 1; i <= m + 1; ++i)
            if (pos_mod(i - k, m + 1) != 0) num *= ix.aik(i, k);
        Rat den(1);
        for (int i = 1; i <= s; ++i) {
            Rat f = ix.bhat(i, k);
            if (f == 0) throw DenominatorVanished(k);
            den *= f;
        }
        if (plain) return num.scaled(Rat(1) / den);
        Rat bp = ix.active_bhat(k);
        if (bp == 1) throw DenominatorVanished(k);
        MPoly top = (MPoly::constant(bp) - ix.active_a(k)) * num;
        return top.scaled(Rat(1) / (den * (bp - 1)));
    }
    // rFm with r <= m+1
    long res = pos_mod(k - 1, m + 1) + 1;  // residue classes written 1..m+1
    bool plain = (res <= m + 1 - r);
    Rat den(1);
    for (int i = 1; i <= m; ++i) {
        Rat f = ix.bik(i, k);
        if (f == 0) throw DenominatorVanished(k);
        den *= f;
    }
    Rat bp = ix.active_b(k);
    if (bp == 1) throw DenominatorVanished(k);
    den *= bp - 1;
    if (plain) {
        MPoly num = MPoly::constant(-1);
        for (int i = 1; i <= r; ++i) num *= ix.ahat(i, k);
        return num.scaled(Rat(1) / den);
    }
    MPoly num = MPoly::constant(bp) - ix.active_ahat(k);
    for (int i = 1; i <= r; ++i)
        if (pos_mod(i - (k - (m + 1 - r)), m + 1) != 0) num *= ix.ahat(i, k);
    return num.scaled(Rat(1) / den);
}

MPoly second_ratio_alpha(const Indexer& ix, long k) {
    if (k == 0) {
        // S_1 of the ratio: prod a_1..a_{r-1} / prod b_1..b_s
        MPoly num = MPoly::constant(1);
        for (int i = 1; i <= ix.r - 1; ++i) num *= ix.a[static_cast<std::size_t>(i - 1)];
        Rat den(1);
        for (int i = 1; i <= ix.s; ++i) {
            if (ix.b[static_cast<std::size_t>(i - 1)] == 0) throw DenominatorVanished(0);
            den *= ix.b[static_cast<std::size_t>(i - 1)];
        }
        return num.scaled(Rat(1) / den);
    }
    return first_ratio_alpha(ix, k);
}

MPoly third_ratio_alpha(const Indexer& ix, long k) {
    int m = ix.m, r = ix.r, s = ix.s;
    if (r >= s) {
        // mFs with 1 <= s <= m (s == m is the plain mFm case)
        bool pause = (pos_mod(k, m + 1) == 0);
        long res = pos_mod(k - 1, m) + 1;
        bool plain = (res <= m - s);
        if (pause && plain) return MPoly();
        Rat den(1);
        for (int i = 1; i <= s; ++i) {
            Rat f = ix.bhat(i, k);
            if (f == 0) throw DenominatorVanished(k);
            den *= f;
        }
        if (pause) {
            Rat bp = ix.active_bhat(k);
            if (bp == 1) throw DenominatorVanished(k);
            MPoly num = MPoly::constant(-1);
            for (int i = 1; i <= m; ++i) num *= ix.aik(i, k);
            return num.scaled(Rat(1) / (den * (bp - 1)));
        }
        MPoly num = MPoly::constant(1);
        for (int i = 1; i <= m; ++i)
            if (pos_mod(i - k, m + 1) != 0) num *= ix.aik(i, k);
        if (plain) return num.scaled(Rat(1) / den);
        Rat bp = ix.active_bhat(k);
        if (bp == 1) throw DenominatorVanished(k);
        num = (MPoly::constant(bp) - ix.active_a(k)) * num;
        return num.scaled(Rat(1) / (den * (bp - 1)));
    }
    // rFm with 0 <= r < m
    Rat den(1);
    for (int i = 1; i <= m; ++i) {
        Rat f = ix.bik(i, k);
        if (f == 0) throw DenominatorVanished(k);
        den *= f;
    }
    Rat bp = ix.active_b(k);
    if (bp == 1) throw DenominatorVanished(k);
    den *= bp - 1;
    if (pos_mod(k, m + 1) <= m - r) {
        MPoly num = MPoly::constant(-1);
        for (int i = 1; i <= r; ++i) num *= ix.ahat3(i, k);
        return num.scaled(Rat(1) / den);
    }
    MPoly num = MPoly::constant(bp) - ix.active_ahat3(k);
    for (int i = 1; i <= r; ++i)
        if (pos_mod(i - (k - (m - r)), m + 1) != 0) num *= ix.ahat3(i, k);
    return num.scaled(Rat(1) / den);
}

// q-analog indexer pieces (all parameters exact rationals)
struct QIndexer {
    int m;
    std::vector<Rat> a, b;
    Rat q;

    Rat qpow(long e) const {
        if (e >= 0) return rat_pow(q, static_cast<unsigned long>(e));
        return Rat(1) / rat_pow(q, static_cast<unsigned long>(-e));
    }
    Rat aik(int i, long k) const {
        return a[static_cast<std::size_t>(i - 1)] * qpow(ceil_div(k + 1 - i, m + 1));
    }
    Rat bik(int i, long k) const {
        return b[static_cast<std::size_t>(i - 1)] * qpow(ceil_div(k + 1 - i, m));
    }
};

MPoly q_first_ratio_alpha(const QIndexer& ix, long k) {
    int m = ix.m;
    int ia = static_cast<int>(pos_mod(k - 1, m + 1)) + 1;
    int ib = static_cast<int>(pos_mod(k - 1, m)) + 1;
    Rat ap = ix.aik(ia, k), bp = ix.bik(ib, k);
    // the active pair enters the contiguous relation at its stage-(k-1)
    // values, i.e. divided by q once
    Rat num = (ap - bp) / ix.q;
    for (int i = 1; i <= m + 1; ++i) {
        if (pos_mod(i - k, m + 1) == 0) continue;
        num *= Rat(1) - ix.aik(i, k);
    }
    Rat den = Rat(1) - bp / ix.q;
    if (den == 0) throw DenominatorVanished(k);
    for (int i = 1; i <= m; ++i) {
        Rat f = Rat(1) - ix.bik(i, k);
        if (f == 0) throw DenominatorVanished(k);
        den *= f;
    }
    return MPoly::constant(num / den);
}

}  // namespace

HyperParams HyperParams::ordinary(std::vector<MPoly> a, std::vector<Rat> b) {
    HyperParams p;
    p.r = static_cast<int>(a.size());
    p.s = static_cast<int>(b.size());
    p.a = std::move(a);
    p.b = std::move(b);
    return p;
}

HyperParams HyperParams::ordinary_rat(std::vector<Rat> a, std::vector<Rat> b) {
    std::vector<MPoly> am;
    am.reserve(a.size());
    for (auto& v : a) am.push_back(MPoly::constant(v));
    return ordinary(std::move(am), std::move(b));
}

HyperParams HyperParams::basic(std::vector<Rat> a, std::vector<Rat> b, Rat q) {
    HyperParams p = ordinary_rat(std::move(a), std::move(b));
    p.q = q;
    return p;
}

HyperParams HyperParams::shifted(int ai, int bj) const {
    HyperParams p = *this;
    if (ai >= 1) {
        auto& v = p.a[static_cast<std::size_t>(ai - 1)];
        v = q ? v.scaled(*q) : v + MPoly::constant(1);
    }
    if (bj >= 1) {
        auto& v = p.b[static_cast<std::size_t>(bj - 1)];
        v = q ? Rat(v * *q) : Rat(v + 1);
    }
    return p;
}

SeriesTrunc hyper_series(const HyperParams& p, int N) {
    SeriesTrunc out(N);
    out.set(0, MPoly::constant(1));
    if (!p.q) {
        MPoly c = MPoly::constant(1);
        for (int n = 1; n <= N; ++n) {
            MPoly num = c;
            for (auto& a : p.a) num *= a + MPoly::constant(n - 1);
            Rat den(n);
            for (std::size_t j = 0; j < p.b.size(); ++j) {
                Rat f = p.b[j] + Rat(n - 1);
                if (f == 0) throw PoleWithinTruncation("b_" + std::to_string(j + 1), n);
                den *= f;
            }
            c = num.scaled(Rat(1) / den);
            out.set(n, c);
        }
        return out;
    }
    const Rat& q = *p.q;
    if (q == 0 || q == 1 || q == -1) throw PoleWithinTruncation("q", 0);
    int sign_exp = p.s + 1 - p.r;
    Rat c(1), qn1(1);  // qn1 = q^{n-1}
    for (int n = 1; n <= N; ++n) {
        Rat num(1);
        for (auto& am : p.a) num *= Rat(1) - rat_of(am, "a") * qn1;
        Rat den(1);
        for (std::size_t j = 0; j < p.b.size(); ++j) {
            Rat f = Rat(1) - p.b[j] * qn1;
            if (f == 0) throw PoleWithinTruncation("b_" + std::to_string(j + 1), n);
            den *= f;
        }
        Rat qq = Rat(1) - qn1 * q;  // 1 - q^n
        if (qq == 0) throw PoleWithinTruncation("q", n);
        den *= qq;
        Rat factor = -qn1;  // (-1) q^{n-1}
        Rat sf(1);
        if (sign_exp >= 0)
            sf = rat_pow(factor, static_cast<unsigned long>(sign_exp));
        else
            sf = Rat(1) / rat_pow(factor, static_cast<unsigned long>(-sign_exp));
        c = c * num / den * sf;
        out.set(n, MPoly::constant(c));
        qn1 *= q;
    }
    return out;
}

bool contiguous_verify(Relation rel, const HyperParams& p, int i, int j, int N) {
    auto prod_a_except = [&](int skip) {
        MPoly r = MPoly::constant(1);
        for (int t = 1; t <= p.r; ++t)
            if (t != skip) r *= p.a[static_cast<std::size_t>(t - 1)];
        return r;
    };
    auto prod_b = [&]() {
        Rat r(1);
        for (auto& b : p.b) r *= b;
        return r;
    };
    auto all_up = [&]() {
        HyperParams u = p;
        for (auto& a : u.a) a = p.q ? a.scaled(*p.q) : a + MPoly::constant(1);
        for (auto& b : u.b) b = p.q ? Rat(b * *p.q) : Rat(b + 1);
        return u;
    };
    switch (rel) {
        case Relation::AShift:
        case Relation::RF0Special: {
            SeriesTrunc lhs = hyper_series(p.shifted(i, 0), N) - hyper_series(p, N);
            MPoly coef = prod_a_except(i).scaled(Rat(1) / prod_b());
            SeriesTrunc rhs =
                (SeriesTrunc::constant(N, coef) * hyper_series(all_up(), N)).shift(1);
            return lhs == rhs;
        }
        case Relation::BShift: {
            SeriesTrunc lhs = hyper_series(p.shifted(0, i), N) - hyper_series(p, N);
            Rat bi = p.b[static_cast<std::size_t>(i - 1)];
            MPoly coef = prod_a_except(0).scaled(Rat(-1) / ((bi + 1) * prod_b()));
            HyperParams up = all_up().shifted(0, i);  // b_i + 2, others + 1
            SeriesTrunc rhs = (SeriesTrunc::constant(N, coef) * hyper_series(up, N)).shift(1);
            return lhs == rhs;
        }
        case Relation::ABShift: {
            SeriesTrunc lhs = hyper_series(p.shifted(i, j), N) - hyper_series(p, N);
            Rat bj = p.b[static_cast<std::size_t>(j - 1)];
            MPoly coef = (MPoly::constant(bj) - p.a[static_cast<std::size_t>(i - 1)]) *
                         prod_a_except(i);
            coef = coef.scaled(Rat(1) / ((bj + 1) * prod_b()));
            HyperParams up = all_up().shifted(0, j);
            SeriesTrunc rhs = (SeriesTrunc::constant(N, coef) * hyper_series(up, N)).shift(1);
            return lhs == rhs;
        }
        case Relation::QABShift: {
            if (!p.q) throw ArityMismatch("q relation needs basic parameters");
            const Rat& q = *p.q;
            SeriesTrunc lhs = hyper_series(p.shifted(i, j), N) - hyper_series(p, N);
            Rat ai = rat_of(p.a[static_cast<std::size_t>(i - 1)], "a");
            Rat bj = p.b[static_cast<std::size_t>(j - 1)];
            Rat coef = ai - bj;
            for (int t = 1; t <= p.r; ++t)
                if (t != i) coef *= Rat(1) - rat_of(p.a[static_cast<std::size_t>(t - 1)], "a");
            Rat den = Rat(1) - q * bj;
            for (auto& b : p.b) den *= Rat(1) - b;
            if (den == 0) throw PoleWithinTruncation("q-contiguous denominator", 0);
            coef /= den;
            int e = p.s + 1 - p.r;
            Rat sgn = (e % 2 == 0) ? Rat(1) : Rat(-1);
            coef *= sgn;
            HyperParams up = all_up().shifted(0, j);
            SeriesTrunc inner = hyper_series(up, N);
            // evaluate at q^{s+1-r} t
            Rat qe = (e >= 0) ? rat_pow(q, static_cast<unsigned long>(e))
                              : Rat(1) / rat_pow(q, static_cast<unsigned long>(-e));
            SeriesTrunc scaled(N);
            Rat pw(1);
            for (int n = 0; n <= N; ++n) {
                scaled.set(n, inner[n].scaled(pw));
                pw *= qe;
            }
            SeriesTrunc rhs =
                (SeriesTrunc::constant(N, MPoly::constant(coef)) * scaled).shift(1);
            return lhs == rhs;
        }
    }
    return false;
}

WeightSystem ratio_weights(RatioKind kind, int r, int s, const HyperParams& p) {
    if (p.r != r || p.s != s) throw ArityMismatch("parameter arity does not match (r,s)");
    switch (kind) {
        case RatioKind::RF0: {
            if (s != 0) throw ArityMismatch("rF0 weights require s = 0");
            int m = r - 1;
            if (m < 1) throw ArityMismatch("rF0 weights require r >= 2");
            std::vector<MPoly> a = p.a;
            // pre-alphas a_1,...,a_{m+1}, a_1+1,...; alpha = window products of m
            auto pre = [a, m](long idx1) {
                long d = idx1 - 1;
                long j = d % (m + 1), k = d / (m + 1);
                return a[static_cast<std::size_t>(j)] + MPoly::constant(Rat(k));
            };
            return WeightSystem::s_closed(m, [pre, m](long i) {
                long k = i - m;
                MPoly prod = MPoly::constant(1);
                for (long t = k + 1; t <= k + m; ++t) prod *= pre(t);
                return prod;
            });
        }
        case RatioKind::First:
        case RatioKind::Second: {
            if (r < 1 || s < 0 || (s == 0 && kind == RatioKind::First))
                throw ArityMismatch("first ratio requires r, s >= 1");
            if (r == 1 && s == 0) throw ArityMismatch("the (1,0) second ratio is degenerate");
            int m = std::max(r - 1, s);
            Indexer ix = make_indexer(m, p, s >= 1);
            bool second = (kind == RatioKind::Second);
            return WeightSystem::s_closed(m, [ix, m, second](long i) {
                return second ? second_ratio_alpha(ix, i - m) : first_ratio_alpha(ix, i - m);
            });
        }
        case RatioKind::Third: {
            if (s < 1 || r < 0) throw ArityMismatch("third ratio requires s >= 1, r >= 0");
            int m = std::max(r, s);
            if (r == 0) {
                // positive-weight form for the 0Fm family (ratio taken at -t)
                std::vector<Rat> b = p.b;
                auto pre = [b, m](long idx1) -> Rat {
                    if (idx1 == 1) {
                        if (b[static_cast<std::size_t>(m - 1)] == 1)
                            throw DenominatorVanished(0);
                        return Rat(1) / (b[static_cast<std::size_t>(m - 1)] - 1);
                    }
                    long d = idx1 - 2;
                    long j = d % m, k = d / m;
                    Rat f = b[static_cast<std::size_t>(j)] + Rat(k);
                    if (f == 0) throw DenominatorVanished(idx1);
                    return Rat(1) / f;
                };
                return WeightSystem::s_closed(m, [pre, m](long i) {
                    long k = i - m;
                    Rat prod(1);
                    for (long t = k + 1; t <= k + m + 1; ++t) prod *= pre(t);
                    return MPoly::constant(prod);
                });
            }
            Indexer ix = make_indexer(m, p, true);
            return WeightSystem::s_closed(
                m, [ix, m](long i) { return third_ratio_alpha(ix, i - m); });
        }
        case RatioKind::QFirst: {
            if (!p.q) throw ArityMismatch("q-first ratio needs q");
            if (r != s + 1 || s < 1) throw ArityMismatch("q-first ratio is for (m+1, m)");
            int m = s;
            QIndexer ix;
            ix.m = m;
            ix.q = *p.q;
            for (auto& a : p.a) ix.a.push_back(rat_of(a, "a"));
            ix.b = p.b;
            return WeightSystem::s_closed(
                m, [ix, m](long i) { return q_first_ratio_alpha(ix, i - m); });
        }
    }
    throw ArityMismatch("unknown ratio kind");
}

bool ratio_verify(RatioKind kind, int r, int s, const HyperParams& p, int N) {
    HyperParams den = p;
    switch (kind) {
        case RatioKind::RF0:
        case RatioKind::Second:
            den.a[static_cast<std::size_t>(r - 1)] =
                p.a[static_cast<std::size_t>(r - 1)] - MPoly::constant(1);
            break;
        case RatioKind::First:
            den.a[static_cast<std::size_t>(r - 1)] =
                p.a[static_cast<std::size_t>(r - 1)] - MPoly::constant(1);
            den.b[static_cast<std::size_t>(s - 1)] = p.b[static_cast<std::size_t>(s - 1)] - 1;
            break;
        case RatioKind::Third:
            den.b[static_cast<std::size_t>(s - 1)] = p.b[static_cast<std::size_t>(s - 1)] - 1;
            break;
        case RatioKind::QFirst:
            den.a[static_cast<std::size_t>(r - 1)] =
                MPoly::constant(rat_of(p.a[static_cast<std::size_t>(r - 1)], "a") / *p.q);
            den.b[static_cast<std::size_t>(s - 1)] = p.b[static_cast<std::size_t>(s - 1)] / *p.q;
            break;
    }
    SeriesTrunc ratio = series_div(hyper_series(p, N), hyper_series(den, N));
    WeightSystem w = ratio_weights(kind, r, s, p);
    bcf::Triangle tri = bcf::compute_triangle(bcf::Family::S, w.m(), w, N);
    bool zeroFm = (kind == RatioKind::Third && r == 0);
    for (int n = 0; n <= N; ++n) {
        MPoly want = ratio[n];
        if (zeroFm && n % 2 == 1) want = -want;
        if (!(tri.at(n, 0) == want)) return false;
    }
    return true;
}

std::vector<SeriesTrunc> ratio_gk_ladder(RatioKind kind, int r, int s, const HyperParams& p,
                                         int K, int N) {
    std::vector<SeriesTrunc> out;
    if (kind == RatioKind::First || kind == RatioKind::Second) {
        int m = std::max(r - 1, s);
        Indexer ix = make_indexer(m, p, s >= 1);
        // g_{-1}
        HyperParams gm1 = p;
        gm1.a[static_cast<std::size_t>(r - 1)] =
            p.a[static_cast<std::size_t>(r - 1)] - MPoly::constant(1);
        if (kind == RatioKind::First && s >= 1)
            gm1.b[static_cast<std::size_t>(s - 1)] = p.b[static_cast<std::size_t>(s - 1)] - 1;
        out.push_back(hyper_series(gm1, N));
        for (long k = 0; k <= K; ++k) {
            HyperParams gk = p;
            for (int i = 1; i <= r; ++i)
                gk.a[static_cast<std::size_t>(i - 1)] =
                    (r >= s + 1) ? ix.aik(i, k) : ix.ahat(i, k);
            for (int i = 1; i <= s; ++i)
                gk.b[static_cast<std::size_t>(i - 1)] =
                    (r >= s + 1) ? ix.bhat(i, k) : ix.bik(i, k);
            out.push_back(hyper_series(gk, N));
        }
        return out;
    }
    if (kind == RatioKind::QFirst) {
        if (!p.q) throw ArityMismatch("q-first ladder needs q");
        int m = s;
        QIndexer ix;
        ix.m = m;
        ix.q = *p.q;
        for (auto& a : p.a) ix.a.push_back(rat_of(a, "a"));
        ix.b = p.b;
        HyperParams gm1 = p;
        gm1.a[static_cast<std::size_t>(r - 1)] =
            MPoly::constant(ix.a[static_cast<std::size_t>(r - 1)] / ix.q);
        gm1.b[static_cast<std::size_t>(s - 1)] = ix.b[static_cast<std::size_t>(s - 1)] / ix.q;
        out.push_back(hyper_series(gm1, N));
        for (long k = 0; k <= K; ++k) {
            HyperParams gk = p;
            for (int i = 1; i <= r; ++i)
                gk.a[static_cast<std::size_t>(i - 1)] = MPoly::constant(ix.aik(i, k));
            for (int i = 1; i <= s; ++i)
                gk.b[static_cast<std::size_t>(i - 1)] = ix.bik(i, k);
            out.push_back(hyper_series(gk, N));
        }
        return out;
    }
    throw ArityMismatch("g_k ladders are provided for the first and q-first ratios");
}

SeriesTrunc log_derivative_ratio_0Fs(const std::vector<Rat>& b, int N) {
    HyperParams p = HyperParams::ordinary({}, b);
    SeriesTrunc f = hyper_series(p, N + 1);
    SeriesTrunc ratio = series_div(f.derivative(), f);  // f'/f to order N
    Rat prod(1);
    for (auto& bb : b) prod *= bb;
    SeriesTrunc out(N);
    for (int n = 0; n <= N; ++n) out.set(n, ratio[n].scaled(prod));
    return out;
}

}  // namespace bcflab::hyper
