#include "bcflab/series.hpp"

#include <algorithm>

#include "bcflab/error.hpp"

namespace bcflab {

SeriesTrunc::SeriesTrunc(int order, std::vector<MPoly> coeffs)
    : coeffs_(std::move(coeffs)) {
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

SeriesTrunc SeriesTrunc::constant(int order, const MPoly& c) {
    SeriesTrunc s(order);
    s.coeffs_[0] = c;
    return s;
}

SeriesTrunc SeriesTrunc::operator+(const SeriesTrunc& o) const {
    int n = std::min(order(), o.order());
    SeriesTrunc r(n);
    for (int i = 0; i <= n; ++i) r.coeffs_[static_cast<std::size_t>(i)] = (*this)[i] + o[i];
    return r;
}

SeriesTrunc SeriesTrunc::operator-(const SeriesTrunc& o) const {
    int n = std::min(order(), o.order());
    SeriesTrunc r(n);
    for (int i = 0; i <= n; ++i) r.coeffs_[static_cast<std::size_t>(i)] = (*this)[i] - o[i];
    return r;
}

SeriesTrunc SeriesTrunc::operator*(const SeriesTrunc& o) const {
    int n = std::min(order(), o.order());
    SeriesTrunc r(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n && j <= o.order(); ++j)
            if (!(*this)[i].is_zero() && !o[j].is_zero())
                r.coeffs_[static_cast<std::size_t>(i + j)] += (*this)[i] * o[j];
    return r;
}

SeriesTrunc SeriesTrunc::shift(int k) const {
    SeriesTrunc r(order());
    for (int i = 0; i + k <= order(); ++i)
        if (i + k >= 0) r.coeffs_[static_cast<std::size_t>(i + k)] = (*this)[i];
    return r;
}

bool SeriesTrunc::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const MPoly& c) { return c.is_zero(); });
}

bool SeriesTrunc::operator==(const SeriesTrunc& o) const {
    int n = std::min(order(), o.order());
    for (int i = 0; i <= n; ++i)
        if (!((*this)[i] == o[i])) return false;
    return true;
}

SeriesTrunc SeriesTrunc::derivative() const {
    if (order() == 0) return SeriesTrunc(0);
    SeriesTrunc r(order() - 1);
    for (int i = 1; i <= order(); ++i)
        r.coeffs_[static_cast<std::size_t>(i - 1)] = (*this)[i].scaled(Rat(i));
    return r;
}

SeriesTrunc series_div(const SeriesTrunc& num, const SeriesTrunc& den) {
    const MPoly& d0 = den[0];
    if (!d0.is_constant() || d0.is_zero())
        throw NonInvertibleConstantTerm("series denominator constant term is " + d0.str());
    Rat inv = Rat(1) / d0.constant_value();
    int n = std::min(num.order(), den.order());
    SeriesTrunc q(n);
    for (int i = 0; i <= n; ++i) {
        MPoly acc = num[i];
        for (int j = 1; j <= i; ++j)
            if (!den[j].is_zero() && !q[i - j].is_zero()) acc -= den[j] * q[i - j];
        q.set(i, acc.scaled(inv));
    }
    return q;
}

SeriesTrunc series_compose(const SeriesTrunc& outer, const SeriesTrunc& inner) {
    if (!inner[0].is_zero())
        throw Error("series_compose: inner series must have zero constant term");
    int n = std::min(outer.order(), inner.order());
    SeriesTrunc r = SeriesTrunc::constant(n, outer[n]);
    for (int i = n - 1; i >= 0; --i) {
        r = r * inner;
        r.set(0, r[0] + outer[i]);
    }
    return r;
}

}  // namespace bcflab
