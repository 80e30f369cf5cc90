#include "bcflab/families.hpp"

#include <algorithm>

#include "bcflab/bcf.hpp"
#include "bcflab/error.hpp"
#include "bcflab/symfun.hpp"

namespace bcflab::families {

MPoly PreAlpha::at(long idx1) const {
    if (idx1 < 1) throw MissingWeight("prealpha", idx1);
    if (!x.empty()) {
        long d = idx1 - 1;
        long p = static_cast<long>(x.size());
        long j = d % p, k = d / p;
        return x[static_cast<std::size_t>(j)] + u[static_cast<std::size_t>(j)].scaled(Rat(k));
    }
    if (idx1 > static_cast<long>(table.size())) throw MissingWeight("prealpha", idx1);
    return table[static_cast<std::size_t>(idx1 - 1)];
}

std::optional<long> PreAlpha::limit() const {
    if (!x.empty()) return std::nullopt;
    return static_cast<long>(table.size()) + 1;
}

PreAlpha PreAlpha::repeat_blocks(int width, MPoly base, MPoly inc) {
    PreAlpha p;
    p.x.assign(static_cast<std::size_t>(width), std::move(base));
    p.u.assign(static_cast<std::size_t>(width), std::move(inc));
    return p;
}

WeightSystem periodic_weights(int m, std::vector<MPoly> x) {
    if (x.empty()) throw ArityMismatch("periodic weights need at least one value");
    return WeightSystem::s_closed(m, [m, x](long i) {
        return x[static_cast<std::size_t>((i - m) % static_cast<long>(x.size()))];
    });
}

WeightSystem eventually_periodic_weights(int m, std::vector<MPoly> prefix,
                                         std::vector<MPoly> x) {
    if (x.empty()) throw ArityMismatch("eventually periodic weights need a periodic part");
    return WeightSystem::s_closed(m, [m, prefix, x](long i) {
        long d = i - m;
        if (d < static_cast<long>(prefix.size())) return prefix[static_cast<std::size_t>(d)];
        d -= static_cast<long>(prefix.size());
        return x[static_cast<std::size_t>(d % static_cast<long>(x.size()))];
    });
}

WeightSystem quasi_affine_weights(int m, std::vector<MPoly> x, std::vector<MPoly> u) {
    if (x.empty() || x.size() != u.size())
        throw ArityMismatch("quasi-affine weights need matching x and u lists");
    return WeightSystem::s_closed(m, [m, x, u](long i) {
        long d = i - m;
        long p = static_cast<long>(x.size());
        long j = d % p, k = d / p;
        return x[static_cast<std::size_t>(j)] + u[static_cast<std::size_t>(j)].scaled(Rat(k));
    });
}

WeightSystem factorized_weights(int m, std::vector<MPoly> x, std::function<MPoly(long)> c) {
    if (x.empty()) throw ArityMismatch("factorized weights need x values");
    if (!c) c = [](long) { return MPoly::constant(1); };
    return WeightSystem::s_closed(m, [m, x, c](long i) {
        long d = i - m;
        long p = static_cast<long>(x.size());
        long j = d % p, k = d / p;
        return MPoly::constant(k + 1) * c(k) * x[static_cast<std::size_t>(j)];
    });
}

WeightSystem prealpha_window_weights(int m, int window, PreAlpha pre) {
    if (window < 1) throw ArityMismatch("window must be >= 1");
    std::optional<long> lim;
    if (auto l = pre.limit()) lim = m + std::max<long>(0, *l - window);
    return WeightSystem::s_closed(
        m,
        [m, window, pre](long i) {
            long k = i - m;
            MPoly prod = MPoly::constant(1);
            for (long t = k + 1; t <= k + window; ++t) prod *= pre.at(t);
            return prod;
        },
        lim);
}

namespace {

// all (parts) >= 0 summing to total
void compositions(int parts, int total, std::vector<int>& acc,
                  const std::function<void(const std::vector<int>&)>& fn) {
    if (parts == 1) {
        acc.push_back(total);
        fn(acc);
        acc.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        acc.push_back(v);
        compositions(parts - 1, total - v, acc, fn);
        acc.pop_back();
    }
}

std::vector<std::string> internal_vars(const char* tag, std::size_t count) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < count; ++i)
        names.push_back(std::string("@") + tag + std::to_string(i));
    return names;
}

// checks integer coefficients, then substitutes the caller's values
MPoly finish_symbolic(const MPoly& sym, const std::vector<std::string>& names,
                      const std::vector<MPoly>& values) {
    for (auto& [mono, c] : sym.terms())
        if (!is_integer(c))
            throw Error("closed-form prefactor failed to cancel: non-integer coefficient " +
                        rat_to_string(c));
    std::map<std::string, MPoly> sub;
    for (std::size_t i = 0; i < names.size(); ++i) sub[names[i]] = values[i];
    return sym.substitute(sub);
}

MPoly mono_power(const std::string& name, int e) {
    return MPoly::var(name, static_cast<std::uint32_t>(e));
}

}  // namespace

MPoly fuss_narayana(FNVariant v, int m, int n, int k, const std::vector<MPoly>& x) {
    bool positive = (v == FNVariant::Q || v == FNVariant::P);
    bool pvariant = (v == FNVariant::P || v == FNVariant::Pminus);
    std::size_t arity = positive ? static_cast<std::size_t>(m) + 1 : static_cast<std::size_t>(m);
    if (x.size() != arity)
        throw ArityMismatch("fuss_narayana expects " + std::to_string(arity) + " values");
    if (pvariant && k != 0) throw ArityMismatch("P-variants take k = 0");
    if (n < k || n < 0) return MPoly();
    if (pvariant && n == 0) return MPoly::constant(1);
    auto names = internal_vars("fn", arity);
    MPoly acc;
    std::vector<int> comp;
    int total = pvariant ? n : n - k;
    compositions(static_cast<int>(arity), total, comp, [&](const std::vector<int>& j) {
        Int coef(1);
        MPoly mono = MPoly::constant(1);
        for (std::size_t i = 0; i < arity && coef != 0; ++i) {
            int ji = j[i];
            switch (v) {
                case FNVariant::Q:
                    coef *= binomial(n + 1, static_cast<unsigned long>(ji));
                    break;
                case FNVariant::P:
                    if (i == 0) {
                        if (ji == 0) {
                            coef = 0;
                            break;
                        }
                        coef *= binomial(n, static_cast<unsigned long>(ji - 1));
                    } else {
                        coef *= binomial(n, static_cast<unsigned long>(ji));
                    }
                    break;
                case FNVariant::Qminus:
                    coef *= binomial(n + ji, static_cast<unsigned long>(ji));
                    break;
                case FNVariant::Pminus:
                    if (i == 0) {
                        if (ji == 0) {
                            coef = 0;
                            break;
                        }
                        coef *= binomial(n + ji, static_cast<unsigned long>(ji - 1));
                    } else {
                        coef *= binomial(n + ji - 1, static_cast<unsigned long>(ji));
                    }
                    break;
            }
            if (coef != 0 && ji > 0) mono *= mono_power(names[i], ji);
        }
        if (coef != 0) acc += mono.scaled(Rat(coef));
    });
    Rat pref = pvariant ? Rat(1, static_cast<unsigned long>(n)) : Rat(k + 1) / Rat(n + 1);
    return finish_symbolic(acc.scaled(pref), names, x);
}

MPoly fuss_narayana_tilde(FNTilde v, int m, int n, int k, const std::vector<MPoly>& y,
                          const std::vector<long>& mult) {
    bool positive = (v == FNTilde::Q || v == FNTilde::P);
    bool pvariant = (v == FNTilde::P || v == FNTilde::Pminus);
    if (y.size() != mult.size() || y.empty())
        throw ArityMismatch("tilde variants need matching value and multiplicity lists");
    long msum = 0;
    for (long p : mult) {
        if (p < 1) throw ArityMismatch("multiplicities must be positive");
        msum += p;
    }
    if (msum != (positive ? m + 1 : m))
        throw ArityMismatch(std::string("multiplicities must sum to ") +
                            (positive ? "m+1" : "m"));
    if (pvariant && k != 0) throw ArityMismatch("P-variants take k = 0");
    if (n < k || n < 0) return MPoly();
    if (pvariant && n == 0) return MPoly::constant(1);
    std::size_t l = y.size();
    auto names = internal_vars("ft", l);
    MPoly acc;
    std::vector<int> comp;
    int total = pvariant ? n : n - k;
    compositions(static_cast<int>(l), total, comp, [&](const std::vector<int>& j) {
        Int coef(1);
        MPoly mono = MPoly::constant(1);
        for (std::size_t i = 0; i < l && coef != 0; ++i) {
            int ji = j[i];
            long pi = mult[i];
            if (pvariant && i == 0) {
                if (ji == 0) {
                    coef = 0;
                    break;
                }
                Int top = positive ? Int(pi * n) : Int(pi * n + ji);
                coef *= binomial(top, static_cast<unsigned long>(ji - 1));
            } else {
                long base = pvariant ? pi * n : pi * (n + 1);
                Int top = positive ? Int(base) : Int(base + ji - 1);
                coef *= binomial(top, static_cast<unsigned long>(ji));
            }
            if (coef != 0 && ji > 0) mono *= mono_power(names[i], ji);
        }
        if (coef != 0) acc += mono.scaled(Rat(coef));
    });
    Rat pref = pvariant ? Rat(1, static_cast<unsigned long>(n)) : Rat(k + 1) / Rat(n + 1);
    return finish_symbolic(acc.scaled(pref), names, y);
}

Rat gen_narayana(int p, int p_prime, int n, int j, bool star) {
    if (!(1 <= p && p <= p_prime)) throw ArityMismatch("gen_narayana needs 1 <= p <= p'");
    if (n == 0) return j == 0 ? Rat(1) : Rat(0);
    if (j < 0 || j > n) return Rat(0);
    Rat r;
    if (!star) {
        if (j == 0) return Rat(0);
        r = Rat(binomial(static_cast<long>(p) * n, static_cast<unsigned long>(j - 1)) *
                binomial(static_cast<long>(p_prime - p) * n, static_cast<unsigned long>(n - j)));
    } else {
        Int acc(0);
        for (int i = 0; i <= j; ++i)
            acc += binomial(static_cast<long>(p) * n, static_cast<unsigned long>(n - i - 1)) *
                   binomial(static_cast<long>(p_prime - p) * n, static_cast<unsigned long>(i)) *
                   binomial(static_cast<long>(n - i), static_cast<unsigned long>(n - j));
        r = Rat(acc);
    }
    r /= n;
    r.canonicalize();
    return r;
}

MPoly aval(int m, int n, const std::vector<MPoly>& x) {
    if (static_cast<int>(x.size()) != m + 1) throw ArityMismatch("aval expects m+1 values");
    if (n == 0) return MPoly::constant(1);
    auto names = internal_vars("av", x.size());
    MPoly acc;
    std::vector<int> comp;
    compositions(m + 1, n, comp, [&](const std::vector<int>& j) {
        if (j[0] == 0) return;
        Int coef(j[0]);
        MPoly mono = mono_power(names[0], j[0]);
        for (int i = 1; i <= m; ++i) {
            int ji = j[static_cast<std::size_t>(i)];
            coef *= binomial(n + ji - 1, static_cast<unsigned long>(ji));
            if (ji > 0) mono *= mono_power(names[static_cast<std::size_t>(i)], ji);
        }
        acc += mono.scaled(Rat(coef));
    });
    return finish_symbolic(acc.scaled(Rat(1, static_cast<unsigned long>(n))), names, x);
}

// ---- multivariate Eulerian -------------------------------------------------

namespace {

MPoly apply_D(const MPoly& f, const std::vector<std::string>& names, bool negative) {
    std::vector<MPoly> xs;
    MPoly sum;
    for (auto& n : names) {
        xs.push_back(MPoly::var(n));
        sum += xs.back();
    }
    MPoly acc;
    for (std::size_t i = 0; i < names.size(); ++i) {
        MPoly d = f.derivative(names[i]);
        if (d.is_zero()) continue;
        MPoly coeff = negative ? (sum + xs[i]) * xs[i] : (sum - xs[i]) * xs[i];
        acc += coeff * d;
    }
    return acc;
}

}  // namespace

WeightSystem eulerian_beta_weights(int m, const std::vector<MPoly>& x,
                                   std::function<MPoly(long)> c, bool negative, int path_m) {
    std::size_t arity = negative ? static_cast<std::size_t>(m) : static_cast<std::size_t>(m) + 1;
    if (x.size() != arity) throw ArityMismatch("eulerian beta weights: wrong x arity");
    if (!c) c = [](long) { return MPoly::constant(1); };
    if (path_m < 0) path_m = m;
    std::vector<MPoly> xs = x;
    return WeightSystem::j_closed(path_m, [xs, c, negative](int ell, long i) {
        MPoly sym =
            negative ? complete_homogeneous(xs, ell + 1) : elementary_symmetric(xs, ell + 1);
        Rat coef = Rat(factorial(static_cast<unsigned long>(i + 1))) /
                   Rat(factorial(static_cast<unsigned long>(i - ell)));
        MPoly cs = MPoly::constant(1);
        for (long L = i - ell; L <= i; ++L) cs *= c(L);
        return sym.scaled(coef) * cs;
    });
}

MPoly eulerian_mv(EuVariant v, int m, int n, int k, const std::vector<MPoly>& x,
                  std::function<MPoly(long)> c) {
    bool negative =
        (v == EuVariant::Pminus || v == EuVariant::Qminus || v == EuVariant::Qnkminus);
    std::size_t arity = negative ? static_cast<std::size_t>(m) : static_cast<std::size_t>(m) + 1;
    if (x.size() != arity)
        throw ArityMismatch("eulerian_mv expects " + std::to_string(arity) + " values");
    bool with_k = (v == EuVariant::Qnk || v == EuVariant::Qnkminus);
    if (!with_k && k != 0) throw ArityMismatch("only the Qnk variants take k != 0");
    if (n < 0 || (with_k && (k < 0 || k > n))) return MPoly();

    if (c) {
        // c != 1: route through the beta closed forms and the J-triangle DP.
        // Negative-type trees have unbounded vertex degrees, so the walk may
        // take falls of any size up to n.
        int path_m = negative ? std::max(m, std::max(n, 1)) : m;
        auto beta = eulerian_beta_weights(m, x, c, negative, path_m);
        switch (v) {
            case EuVariant::Q:
            case EuVariant::Qminus:
                return bcf::compute_triangle(bcf::Family::J, path_m, beta, n).at(n, 0);
            case EuVariant::Qnk:
            case EuVariant::Qnkminus:
                return bcf::compute_triangle(bcf::Family::J, path_m, beta, n).at(n, k);
            case EuVariant::P: {
                if (n == 0) return MPoly::constant(1);
                return c(0) * x[0] *
                       bcf::compute_triangle(bcf::Family::J, path_m, beta, n - 1).at(n - 1, 0);
            }
            case EuVariant::Pminus: {
                if (n == 0) return MPoly::constant(1);
                auto tri = bcf::compute_triangle(bcf::Family::J, path_m, beta, n - 1);
                MPoly acc;
                MPoly cprod = MPoly::constant(1);
                for (int j = 1; j <= n; ++j) {
                    cprod *= c(j - 1);
                    acc += Rat(factorial(static_cast<unsigned long>(j))) *
                           (x[0].pow(static_cast<unsigned long>(j)) * cprod *
                            tri.at(n - 1, j - 1));
                }
                return acc;
            }
        }
    }

    // c == 1: differential recurrences, evaluated on internal indeterminates
    auto names = internal_vars("eu", arity);
    std::vector<MPoly> xs;
    MPoly sum;
    for (auto& nm : names) {
        xs.push_back(MPoly::var(nm));
        sum += xs.back();
    }
    MPoly result;
    switch (v) {
        case EuVariant::P:
        case EuVariant::Pminus: {
            MPoly f = MPoly::constant(1);
            for (int i = 0; i < n; ++i) f = apply_D(f, names, negative) + xs[0] * f;
            result = f;
            break;
        }
        case EuVariant::Q:
        case EuVariant::Qminus: {
            MPoly f = MPoly::constant(1);
            for (int i = 0; i < n; ++i) f = apply_D(f, names, negative) + sum * f;
            result = f;
            break;
        }
        case EuVariant::Qnk:
        case EuVariant::Qnkminus: {
            std::vector<std::vector<MPoly>> q(static_cast<std::size_t>(n) + 1);
            q[0] = {MPoly::constant(1)};
            for (int nn = 1; nn <= n; ++nn) {
                auto& prev = q[static_cast<std::size_t>(nn - 1)];
                auto& cur = q[static_cast<std::size_t>(nn)];
                cur.resize(static_cast<std::size_t>(nn) + 1);
                for (int kk = 0; kk <= nn; ++kk) {
                    MPoly val;
                    if (kk < static_cast<int>(prev.size())) {
                        const MPoly& up = prev[static_cast<std::size_t>(kk)];
                        val = apply_D(up, names, negative) + sum.scaled(Rat(kk + 1)) * up;
                    }
                    if (kk >= 1) val += prev[static_cast<std::size_t>(kk - 1)];
                    cur[static_cast<std::size_t>(kk)] = std::move(val);
                }
            }
            result = q[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
            break;
        }
    }
    std::map<std::string, MPoly> sub;
    for (std::size_t i = 0; i < names.size(); ++i) sub[names[i]] = x[i];
    return result.substitute(sub);
}

MPoly rth_order_eulerian(int r, int n, bool reversed) {
    if (r < 1 || n < 0) throw ArityMismatch("rth_order_eulerian needs r >= 1, n >= 0");
    std::vector<std::vector<Int>> rows(static_cast<std::size_t>(n) + 1);
    rows[0] = {Int(1)};
    for (int nn = 1; nn <= n; ++nn) {
        auto& prev = rows[static_cast<std::size_t>(nn - 1)];
        auto& cur = rows[static_cast<std::size_t>(nn)];
        cur.assign(static_cast<std::size_t>(nn) + 1, Int(0));
        for (int kk = 0; kk <= nn; ++kk) {
            Int v(0);
            if (kk < static_cast<int>(prev.size()))
                v += Int(kk + 1) * prev[static_cast<std::size_t>(kk)];
            if (kk >= 1 && kk - 1 < static_cast<int>(prev.size()))
                v += Int(static_cast<long>(r) * nn - (r - 1) - kk) *
                     prev[static_cast<std::size_t>(kk - 1)];
            cur[static_cast<std::size_t>(kk)] = v;
        }
    }
    MPoly acc;
    auto& row = rows[static_cast<std::size_t>(n)];
    for (int kk = 0; kk < static_cast<int>(row.size()); ++kk) {
        if (row[static_cast<std::size_t>(kk)] == 0) continue;
        int e = reversed ? (n == 0 ? 0 : n - 1 - kk) : kk;
        if (e < 0) continue;
        acc += MPoly::var("x", static_cast<std::uint32_t>(e))
                   .scaled(Rat(row[static_cast<std::size_t>(kk)]));
    }
    return acc;
}

Rat catalan(int n) { return Rat(binomial(2L * n, static_cast<unsigned long>(n))) / Rat(n + 1); }

Rat fuss_catalan(int p, int n) {
    Rat r = Rat(binomial(static_cast<long>(p) * n, static_cast<unsigned long>(n))) /
            Rat(static_cast<long>(p - 1) * n + 1);
    r.canonicalize();
    return r;
}

Rat mschroeder_count(int m, int n) {
    Rat acc(0);
    for (int l = 0; l <= n; ++l) {
        Rat term = Rat(binomial(static_cast<long>(m + 1) * n - l, static_cast<unsigned long>(n)) *
                       binomial(static_cast<long>(n), static_cast<unsigned long>(l)));
        term /= Rat(static_cast<long>(m) * n - l + 1);
        acc += term;
    }
    acc.canonicalize();
    return acc;
}

Rat narayana_number(int n, int j) {
    if (n == 0) return j == 0 ? Rat(1) : Rat(0);
    if (j < 1 || j > n) return Rat(0);
    Rat r = Rat(binomial(static_cast<long>(n), static_cast<unsigned long>(j - 1)) *
                binomial(static_cast<long>(n), static_cast<unsigned long>(j)));
    r /= n;
    r.canonicalize();
    return r;
}

Rat multifactorial(int r, int n) {
    Rat acc(1);
    for (int j = 0; j < n; ++j) acc *= Rat(1 + static_cast<long>(j) * r);
    return acc;
}

MPoly stirling_cycle(int n, const MPoly& x, const MPoly& y) {
    MPoly acc = MPoly::constant(1);
    for (int j = 0; j < n; ++j) acc *= x + y.scaled(Rat(j));
    return acc;
}

Rat classic_number(const std::string& id, int n, const std::vector<Rat>& params) {
    auto need = [&](std::size_t c) {
        if (params.size() != c)
            throw UnknownId("classic number '" + id + "' takes " + std::to_string(c) +
                            " parameter(s)");
    };
    auto as_int = [](const Rat& r) { return static_cast<int>(r.get_num().get_si()); };
    if (id == "catalan") {
        need(0);
        return catalan(n);
    }
    if (id == "fuss-catalan") {
        need(1);
        return fuss_catalan(as_int(params[0]), n);
    }
    if (id == "mschroeder") {
        need(1);
        return mschroeder_count(as_int(params[0]), n);
    }
    if (id == "narayana") {
        need(1);
        return narayana_number(n, as_int(params[0]));
    }
    if (id == "multifactorial") {
        need(1);
        return multifactorial(as_int(params[0]), n);
    }
    if (id == "genocchi") {
        need(1);
        return genocchi(as_int(params[0]), n);
    }
    throw UnknownId("unknown classic sequence '" + id + "'");
}

MPoly gandhi(int m, int n) {
    if (n < 1) throw ArityMismatch("gandhi polynomials start at n = 1");
    MPoly y = MPoly::var("y");
    MPoly g = MPoly::constant(1);
    std::map<std::string, MPoly> shift{{"y", y + MPoly::constant(1)}};
    for (int i = 2; i <= n; ++i) {
        MPoly shifted = g.substitute(shift);
        g = (y + MPoly::constant(1)).pow(static_cast<unsigned long>(m) + 1) * shifted -
            y.pow(static_cast<unsigned long>(m) + 1) * g;
    }
    return g;
}

Rat genocchi(int m, int n) {
    return gandhi(m, n).substitute({{"y", MPoly::constant(1)}}).constant_value();
}

WeightSystem gandhi_conjecture_weights(int m) {
    PreAlpha pre;
    MPoly y = MPoly::var("y");
    for (int j = 0; j < m; ++j) {
        pre.x.push_back(y);
        pre.u.push_back(MPoly::constant(1));
    }
    pre.x.push_back(MPoly::constant(1));
    pre.u.push_back(MPoly::constant(1));
    return prealpha_window_weights(m, m + 1, std::move(pre));
}

}  // namespace bcflab::families
