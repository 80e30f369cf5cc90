#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bcflab/rational.hpp"

namespace bcflab {

using VarId = std::uint32_t;

// Global interner for indeterminate names. Append-only, thread-safe.
class VarTable {
public:
    static VarTable& instance();
    VarId intern(std::string_view name);
    std::string name(VarId id) const;

private:
    VarTable() = default;
};

struct Monomial {
    // (var, exponent) entries with exponent > 0, sorted by VarId ascending.
    std::vector<std::pair<VarId, std::uint32_t>> e;

    std::uint32_t degree() const {
        std::uint32_t d = 0;
        for (auto& [v, x] : e) d += x;
        return d;
    }
    bool empty() const { return e.empty(); }
    bool operator==(const Monomial&) const = default;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& d, const Monomial& m);
Monomial mono_div(const Monomial& m, const Monomial& d);
// Graded order, ties broken lexicographically by VarId (smaller id more
// significant). Returns <0, 0, >0. Multiplicative, so usable for division.
int mono_cmp(const Monomial& a, const Monomial& b);

// Canonical sparse multivariate polynomial over Q. Terms are kept sorted
// with the leading monomial first; no zero coefficients are stored. Values
// are immutable in spirit: all operations return new polynomials.
class MPoly {
public:
    using Term = std::pair<Monomial, Rat>;

    MPoly() = default;

    static MPoly constant(Rat c);
    static MPoly constant(long c) { return constant(Rat(c)); }
    static MPoly var(std::string_view name, std::uint32_t exp = 1);
    static MPoly from_terms(std::vector<Term> terms);  // canonicalizes

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.empty()); }
    Rat constant_value() const;  // requires is_constant()
    bool is_one() const { return is_constant() && !is_zero() && terms_[0].second == 1; }

    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::uint32_t total_degree() const { return terms_.empty() ? 0 : terms_[0].first.degree(); }

    Rat coeff(const Monomial& m) const;
    bool coeffwise_nonneg() const;

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly scaled(const Rat& c) const;
    MPoly pow(unsigned long k) const;

    // Exact division; throws DivisionFailed if o does not divide exactly.
    MPoly divide_exact(const MPoly& o) const;

    // Replaces each assigned indeterminate (by name) and expands.
    MPoly substitute(const std::map<std::string, MPoly>& assignment) const;

    // Partial derivative with respect to the named indeterminate.
    MPoly derivative(std::string_view name) const;

    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // Human-readable rendering (deterministic, name-ordered).
    std::string str() const;

private:
    std::vector<Term> terms_;
};

inline MPoly operator*(const Rat& c, const MPoly& p) { return p.scaled(c); }
inline MPoly operator*(long c, const MPoly& p) { return p.scaled(Rat(c)); }

}  // namespace bcflab
