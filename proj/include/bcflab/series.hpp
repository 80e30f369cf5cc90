#pragma once

#include <vector>

#include "bcflab/mpoly.hpp"

namespace bcflab {

// Truncated power series in one formal variable t with MPoly coefficients.
// The order N is fixed at construction; arithmetic is exact modulo t^{N+1}.
// Mixing different orders takes the minimum of the two.
class SeriesTrunc {
public:
    explicit SeriesTrunc(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {}
    SeriesTrunc(int order, std::vector<MPoly> coeffs);

    static SeriesTrunc constant(int order, const MPoly& c);
    static SeriesTrunc one(int order) { return constant(order, MPoly::constant(1)); }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const MPoly& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    void set(int n, MPoly c) { coeffs_.at(static_cast<std::size_t>(n)) = std::move(c); }

    SeriesTrunc operator+(const SeriesTrunc& o) const;
    SeriesTrunc operator-(const SeriesTrunc& o) const;
    SeriesTrunc operator*(const SeriesTrunc& o) const;

    // Multiplication by t^k (shifts coefficients, drops the tail).
    SeriesTrunc shift(int k) const;

    bool is_zero() const;
    bool operator==(const SeriesTrunc& o) const;

    // Formal derivative d/dt (order drops by one).
    SeriesTrunc derivative() const;

private:
    std::vector<MPoly> coeffs_;  // coefficient of t^0 .. t^N
};

// Exact division modulo t^{N+1}. The denominator's constant term must be a
// nonzero rational constant; otherwise NonInvertibleConstantTerm is thrown.
SeriesTrunc series_div(const SeriesTrunc& num, const SeriesTrunc& den);

// Composition outer(inner) where inner has zero constant term.
SeriesTrunc series_compose(const SeriesTrunc& outer, const SeriesTrunc& inner);

}  // namespace bcflab
