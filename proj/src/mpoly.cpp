#include "bcflab/mpoly.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "bcflab/error.hpp"

namespace bcflab {

namespace {

struct VarTableState {
    std::mutex mu;
    std::deque<std::string> names;
    std::map<std::string, VarId, std::less<>> ids;
};

VarTableState& vt_state() {
    static VarTableState s;
    return s;
}

}  // namespace

VarTable& VarTable::instance() {
    static VarTable t;
    return t;
}

VarId VarTable::intern(std::string_view name) {
    auto& s = vt_state();
    std::lock_guard<std::mutex> lk(s.mu);
    auto it = s.ids.find(name);
    if (it != s.ids.end()) return it->second;
    VarId id = static_cast<VarId>(s.names.size());
    s.names.emplace_back(name);
    s.ids.emplace(std::string(name), id);
    return id;
}

std::string VarTable::name(VarId id) const {
    auto& s = vt_state();
    std::lock_guard<std::mutex> lk(s.mu);
    return s.names.at(id);
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.e.reserve(a.e.size() + b.e.size());
    std::size_t i = 0, j = 0;
    while (i < a.e.size() && j < b.e.size()) {
        if (a.e[i].first == b.e[j].first) {
            r.e.emplace_back(a.e[i].first, a.e[i].second + b.e[j].second);
            ++i, ++j;
        } else if (a.e[i].first < b.e[j].first) {
            r.e.push_back(a.e[i++]);
        } else {
            r.e.push_back(b.e[j++]);
        }
    }
    for (; i < a.e.size(); ++i) r.e.push_back(a.e[i]);
    for (; j < b.e.size(); ++j) r.e.push_back(b.e[j]);
    return r;
}

bool mono_divides(const Monomial& d, const Monomial& m) {
    std::size_t j = 0;
    for (auto& [v, x] : d.e) {
        while (j < m.e.size() && m.e[j].first < v) ++j;
        if (j >= m.e.size() || m.e[j].first != v || m.e[j].second < x) return false;
    }
    return true;
}

Monomial mono_div(const Monomial& m, const Monomial& d) {
    Monomial r;
    std::size_t j = 0;
    for (auto& [v, x] : m.e) {
        std::uint32_t sub = 0;
        while (j < d.e.size() && d.e[j].first < v) ++j;
        if (j < d.e.size() && d.e[j].first == v) sub = d.e[j].second;
        if (x > sub) r.e.emplace_back(v, x - sub);
    }
    return r;
}

int mono_cmp(const Monomial& a, const Monomial& b) {
    std::uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // lexicographic on full exponent vectors, smaller VarId more significant
    std::size_t i = 0, j = 0;
    while (i < a.e.size() && j < b.e.size()) {
        if (a.e[i].first == b.e[j].first) {
            if (a.e[i].second != b.e[j].second)
                return a.e[i].second < b.e[j].second ? -1 : 1;
            ++i, ++j;
        } else if (a.e[i].first < b.e[j].first) {
            return 1;  // a has a positive exponent on an earlier var
        } else {
            return -1;
        }
    }
    if (i < a.e.size()) return 1;
    if (j < b.e.size()) return -1;
    return 0;
}

namespace {

// leading-first ordering used for the terms_ vector
inline bool term_before(const Monomial& a, const Monomial& b) { return mono_cmp(a, b) > 0; }

using u128 = unsigned __int128;

struct PackFrame {
    std::vector<VarId> vars;     // ascending
    std::vector<unsigned> shift;  // bit offset per var (less significant than degree field)
    unsigned deg_shift = 0;
    bool ok = false;
};

unsigned bit_width_u64(std::uint64_t x) { return x == 0 ? 1 : std::bit_width(x); }

PackFrame make_frame(const std::vector<MPoly::Term>& a, const std::vector<MPoly::Term>& b) {
    PackFrame f;
    std::map<VarId, std::uint32_t> maxa, maxb;
    std::uint32_t dega = 0, degb = 0;
    for (auto& [m, c] : a) {
        dega = std::max(dega, m.degree());
        for (auto& [v, x] : m.e) maxa[v] = std::max(maxa[v], x);
    }
    for (auto& [m, c] : b) {
        degb = std::max(degb, m.degree());
        for (auto& [v, x] : m.e) maxb[v] = std::max(maxb[v], x);
    }
    std::map<VarId, unsigned> width;
    for (auto& [v, x] : maxa) width[v] = x;
    for (auto& [v, x] : maxb) width[v] += x;
    unsigned total = 0;
    for (auto& [v, w] : width) total += bit_width_u64(w);
    unsigned degw = bit_width_u64(static_cast<std::uint64_t>(dega) + degb);
    total += degw;
    if (total > 120) return f;
    // vars ascending; later vars occupy lower bits so integer compare matches
    // (degree, id-lex) order
    unsigned off = 0;
    std::vector<VarId> vars;
    std::vector<unsigned> shifts;
    for (auto it = width.rbegin(); it != width.rend(); ++it) {
        vars.push_back(it->first);
        shifts.push_back(off);
        off += bit_width_u64(it->second);
    }
    std::reverse(vars.begin(), vars.end());
    std::reverse(shifts.begin(), shifts.end());
    f.vars = std::move(vars);
    f.shift = std::move(shifts);
    f.deg_shift = off;
    f.ok = true;
    return f;
}

u128 pack_mono(const PackFrame& f, const Monomial& m) {
    u128 key = static_cast<u128>(m.degree()) << f.deg_shift;
    std::size_t fi = 0;
    for (auto& [v, x] : m.e) {
        while (f.vars[fi] != v) ++fi;
        key |= static_cast<u128>(x) << f.shift[fi];
    }
    return key;
}

Monomial unpack_mono(const PackFrame& f, u128 key) {
    Monomial m;
    for (std::size_t i = 0; i < f.vars.size(); ++i) {
        unsigned hi = (i == 0) ? f.deg_shift : f.shift[i - 1];
        u128 mask = (hi - f.shift[i] >= 128) ? ~u128(0) : ((u128(1) << (hi - f.shift[i])) - 1);
        auto x = static_cast<std::uint32_t>((key >> f.shift[i]) & mask);
        if (x) m.e.emplace_back(f.vars[i], x);
    }
    return m;
}

// Open-addressing accumulator keyed by packed monomials.
template <typename Value>
class PackMap {
public:
    explicit PackMap(std::size_t expect) {
        std::size_t cap = 64;
        while (cap < expect * 2) cap <<= 1;
        keys_.resize(cap);
        vals_.resize(cap);
        used_.assign(cap, 0);
        mask_ = cap - 1;
    }

    // returns the slot for key, marking it used; fresh slots report true
    bool probe(u128 key, std::size_t& out) {
        std::size_t i = slot(key);
        out = i;
        if (!used_[i]) {
            used_[i] = 1;
            keys_[i] = key;
            if (++count_ * 10 > keys_.size() * 7) {
                grow();
                out = slot(key);
            }
            return true;
        }
        return false;
    }

    Value& val(std::size_t i) { return vals_[i]; }

    template <typename F>
    void for_each(F&& fn) {
        for (std::size_t i = 0; i < keys_.size(); ++i)
            if (used_[i] && vals_[i] != 0) fn(keys_[i], vals_[i]);
    }

private:
    std::size_t slot(u128 key) const {
        std::uint64_t lo = static_cast<std::uint64_t>(key);
        std::uint64_t hi = static_cast<std::uint64_t>(key >> 64);
        std::uint64_t h = (lo ^ (hi * 0x9e3779b97f4a7c15ULL)) * 0xff51afd7ed558ccdULL;
        h ^= h >> 33;
        std::size_t i = h & mask_;
        while (used_[i] && keys_[i] != key) i = (i + 1) & mask_;
        return i;
    }

    void grow() {
        std::vector<u128> ok = std::move(keys_);
        std::vector<Value> ov = std::move(vals_);
        std::vector<std::uint8_t> ou = std::move(used_);
        std::size_t cap = ok.size() * 2;
        keys_.assign(cap, 0);
        vals_.resize(0);
        vals_.resize(cap);
        used_.assign(cap, 0);
        mask_ = cap - 1;
        for (std::size_t i = 0; i < ok.size(); ++i) {
            if (!ou[i]) continue;
            std::size_t j = slot(ok[i]);
            used_[j] = 1;
            keys_[j] = ok[i];
            vals_[j] = std::move(ov[i]);
        }
    }

    std::vector<u128> keys_;
    std::vector<Value> vals_;
    std::vector<std::uint8_t> used_;
    std::size_t mask_ = 0;
    std::size_t count_ = 0;
};

std::size_t mul_expect(std::size_t na, std::size_t nb) {
    std::size_t pairs = na * nb;
    std::size_t cap = (na + nb) * 8;
    return std::min(pairs, cap);
}

std::vector<MPoly::Term> mul_packed(const PackFrame& f, const std::vector<MPoly::Term>& a,
                                    const std::vector<MPoly::Term>& b) {
    std::vector<std::pair<u128, const Rat*>> pa, pb;
    pa.reserve(a.size());
    pb.reserve(b.size());
    for (auto& [m, c] : a) pa.emplace_back(pack_mono(f, m), &c);
    for (auto& [m, c] : b) pb.emplace_back(pack_mono(f, m), &c);
    bool integral = true;
    for (auto& [m, c] : a)
        if (mpz_cmp_ui(mpq_denref(c.get_mpq_t()), 1) != 0) {
            integral = false;
            break;
        }
    if (integral)
        for (auto& [m, c] : b)
            if (mpz_cmp_ui(mpq_denref(c.get_mpq_t()), 1) != 0) {
                integral = false;
                break;
            }
    std::vector<std::pair<u128, Rat>> packed;
    if (integral) {
        // integer coefficients dominate hot workloads; accumulate with
        // fused mpz_addmul and no canonicalization
        PackMap<Int> acc(mul_expect(a.size(), b.size()));
        for (auto& [ka, ca] : pa) {
            mpz_srcptr za = mpq_numref(ca->get_mpq_t());
            for (auto& [kb, cb] : pb) {
                std::size_t i;
                if (acc.probe(ka + kb, i))
                    mpz_mul(acc.val(i).get_mpz_t(), za, mpq_numref(cb->get_mpq_t()));
                else
                    mpz_addmul(acc.val(i).get_mpz_t(), za, mpq_numref(cb->get_mpq_t()));
            }
        }
        acc.for_each([&](u128 k, Int& v) { packed.emplace_back(k, Rat(std::move(v))); });
    } else {
        PackMap<Rat> acc(mul_expect(a.size(), b.size()));
        mpq_t prod;
        mpq_init(prod);
        for (auto& [ka, ca] : pa)
            for (auto& [kb, cb] : pb) {
                mpq_mul(prod, ca->get_mpq_t(), cb->get_mpq_t());
                std::size_t i;
                if (acc.probe(ka + kb, i))
                    mpq_set(acc.val(i).get_mpq_t(), prod);
                else
                    mpq_add(acc.val(i).get_mpq_t(), acc.val(i).get_mpq_t(), prod);
            }
        mpq_clear(prod);
        acc.for_each([&](u128 k, Rat& v) { packed.emplace_back(k, std::move(v)); });
    }
    std::sort(packed.begin(), packed.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    std::vector<MPoly::Term> out;
    out.reserve(packed.size());
    for (auto& [k, v] : packed) out.emplace_back(unpack_mono(f, k), std::move(v));
    return out;
}

std::vector<MPoly::Term> mul_generic(const std::vector<MPoly::Term>& a,
                                     const std::vector<MPoly::Term>& b) {
    std::map<Monomial, Rat, decltype([](const Monomial& x, const Monomial& y) {
                 return mono_cmp(x, y) > 0;
             })>
        acc;
    for (auto& [ma, ca] : a)
        for (auto& [mb, cb] : b) {
            Monomial m = mono_mul(ma, mb);
            auto [it, fresh] = acc.try_emplace(std::move(m), ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    std::vector<MPoly::Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) out.emplace_back(m, c);
    return out;
}

}  // namespace

MPoly MPoly::constant(Rat c) {
    MPoly p;
    c.canonicalize();
    if (c != 0) p.terms_.emplace_back(Monomial{}, std::move(c));
    return p;
}

MPoly MPoly::var(std::string_view name, std::uint32_t exp) {
    if (exp == 0) return constant(1);
    MPoly p;
    Monomial m;
    m.e.emplace_back(VarTable::instance().intern(name), exp);
    p.terms_.emplace_back(std::move(m), Rat(1));
    return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return term_before(a.first, b.first); });
    MPoly p;
    for (auto& [m, c] : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == m)
            p.terms_.back().second += c;
        else
            p.terms_.emplace_back(std::move(m), c);
    }
    std::erase_if(p.terms_, [](const Term& t) { return t.second == 0; });
    return p;
}

Rat MPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    return terms_[0].second;
}

Rat MPoly::coeff(const Monomial& m) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), m,
        [](const Term& t, const Monomial& key) { return term_before(t.first, key); });
    if (it != terms_.end() && it->first == m) return it->second;
    return Rat(0);
}

bool MPoly::coeffwise_nonneg() const {
    for (auto& [m, c] : terms_)
        if (c < 0) return false;
    return true;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = mono_cmp(terms_[i].first, o.terms_[j].first);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rat s = terms_[i].second + o.terms_[j].second;
            if (s != 0) r.terms_.emplace_back(terms_[i].first, std::move(s));
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
    if (terms_.empty() || o.terms_.empty()) return MPoly();
    if (is_constant()) return o.scaled(terms_[0].second);
    if (o.is_constant()) return scaled(o.terms_[0].second);
    MPoly r;
    if (terms_.size() * o.terms_.size() > 4096) {
        PackFrame f = make_frame(terms_, o.terms_);
        if (f.ok) {
            r.terms_ = mul_packed(f, terms_, o.terms_);
            return r;
        }
    }
    r.terms_ = mul_generic(terms_, o.terms_);
    return r;
}

MPoly MPoly::scaled(const Rat& c) const {
    if (c == 0) return MPoly();
    MPoly r = *this;
    for (auto& [m, co] : r.terms_) co *= c;
    return r;
}

MPoly MPoly::pow(unsigned long k) const {
    MPoly r = constant(1), b = *this;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

MPoly MPoly::divide_exact(const MPoly& o) const {
    if (o.is_zero()) throw DivisionFailed("division by zero polynomial");
    if (o.is_constant()) return scaled(Rat(1) / o.constant_value());
    MPoly rem = *this;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
        const auto& [lm, lc] = rem.terms_[0];
        const auto& [dm, dc] = o.terms_[0];
        if (!mono_divides(dm, lm))
            throw DivisionFailed("leading term not divisible");
        Monomial qm = mono_div(lm, dm);
        Rat qc = lc / dc;
        MPoly t;
        t.terms_.emplace_back(qm, qc);
        quot.push_back({std::move(qm), std::move(qc)});
        rem = rem - t * o;
    }
    return from_terms(std::move(quot));
}

MPoly MPoly::substitute(const std::map<std::string, MPoly>& assignment) const {
    std::map<VarId, const MPoly*> by_id;
    for (auto& [name, val] : assignment) by_id[VarTable::instance().intern(name)] = &val;
    std::map<std::pair<VarId, std::uint32_t>, MPoly> pow_cache;
    MPoly result;
    for (auto& [m, c] : terms_) {
        MPoly term = constant(c);
        for (auto& [v, x] : m.e) {
            auto sub = by_id.find(v);
            if (sub == by_id.end()) {
                MPoly mv;
                Monomial mm;
                mm.e.emplace_back(v, x);
                mv = from_terms({{std::move(mm), Rat(1)}});
                term = term * mv;
            } else {
                auto key = std::make_pair(v, x);
                auto it = pow_cache.find(key);
                if (it == pow_cache.end()) it = pow_cache.emplace(key, sub->second->pow(x)).first;
                term = term * it->second;
            }
        }
        result += term;
    }
    return result;
}

MPoly MPoly::derivative(std::string_view name) const {
    VarId v = VarTable::instance().intern(name);
    std::vector<Term> out;
    for (auto& [m, c] : terms_) {
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i].first != v) continue;
            Monomial d = m;
            if (d.e[i].second == 1)
                d.e.erase(d.e.begin() + static_cast<long>(i));
            else
                d.e[i].second -= 1;
            out.push_back({std::move(d), c * Rat(static_cast<long>(m.e[i].second))});
        }
    }
    return from_terms(std::move(out));
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    // decorate with name-ordered exponent lists, sort graded-lex by name
    struct Dec {
        std::vector<std::pair<std::string, std::uint32_t>> named;
        std::uint32_t deg;
        const Term* t;
    };
    std::vector<Dec> dec;
    dec.reserve(terms_.size());
    auto& vt = VarTable::instance();
    for (auto& t : terms_) {
        Dec d;
        d.deg = t.first.degree();
        d.t = &t;
        for (auto& [v, x] : t.first.e) d.named.emplace_back(vt.name(v), x);
        std::sort(d.named.begin(), d.named.end());
        dec.push_back(std::move(d));
    }
    std::sort(dec.begin(), dec.end(), [](const Dec& a, const Dec& b) {
        if (a.deg != b.deg) return a.deg > b.deg;
        return a.named > b.named;
    });
    std::ostringstream os;
    bool first = true;
    for (auto& d : dec) {
        const Rat& c = d.t->second;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Rat a = abs(c);
        bool unit = (a == 1) && !d.named.empty();
        if (!unit) {
            os << a.get_num().get_str();
            if (a.get_den() != 1) os << "/" << a.get_den().get_str();
        }
        bool firstvar = true;
        for (auto& [n, x] : d.named) {
            if (!firstvar || !unit) os << "*";
            firstvar = false;
            os << n;
            if (x > 1) os << "^" << x;
        }
    }
    return os.str();
}

}  // namespace bcflab
