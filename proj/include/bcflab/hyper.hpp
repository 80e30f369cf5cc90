#pragma once

#include <optional>
#include <vector>

#include "bcflab/series.hpp"
#include "bcflab/weights.hpp"

namespace bcflab::hyper {

using bcf::WeightSystem;

// Parameters of an rFs (or, when q is set, r-phi-s) series. Numerator
// parameters may stay symbolic only when s = 0; denominator parameters and q
// are exact rationals kept clear of poles within the truncation order.
struct HyperParams {
    int r = 0, s = 0;
    std::vector<MPoly> a;
    std::vector<Rat> b;
    std::optional<Rat> q;

    static HyperParams ordinary(std::vector<MPoly> a, std::vector<Rat> b);
    static HyperParams ordinary_rat(std::vector<Rat> a, std::vector<Rat> b);
    static HyperParams basic(std::vector<Rat> a, std::vector<Rat> b, Rat q);

    HyperParams shifted(int ai, int bj) const;  // a_i -> a_i + 1 (or *q), b_j likewise
};

// Exact truncated series; the basic case includes the
// ((-1)^n q^{n(n-1)/2})^{s+1-r} factor. Throws PoleWithinTruncation.
SeriesTrunc hyper_series(const HyperParams& p, int N);

enum class Relation { AShift, BShift, ABShift, RF0Special, QABShift };

// Verifies the three-term contiguous relation exactly modulo t^{N+1};
// i and j are the 1-based active parameter indices (ignored where a relation
// does not use them).
bool contiguous_verify(Relation rel, const HyperParams& p, int i, int j, int N);

enum class RatioKind { First, Second, Third, RF0, QFirst };

// Branched-continued-fraction weights for the contiguous ratio of the given
// kind; m = max(r-1, s) for First/Second/RF0/QFirst and max(r, s) for Third.
WeightSystem ratio_weights(RatioKind kind, int r, int s, const HyperParams& p);

// True iff the ratio series (numerator/denominator per the kind) matches
// sum S_n^{(m)}(ratio_weights) t^n coefficientwise for n <= N. The Third
// ratio of 0Fm is checked against (-1)^n V_n.
bool ratio_verify(RatioKind kind, int r, int s, const HyperParams& p, int N);

// The g_k ladder series (k = -1..K) whose three-term recurrence underlies the
// kind's continued fraction; used with bcf::euler_gauss_verify.
std::vector<SeriesTrunc> ratio_gk_ladder(RatioKind kind, int r, int s, const HyperParams& p,
                                         int K, int N);

// Log-derivative ratio W^{(0,s)}: series of 0Fs(b+1)/0Fs(b) computed as
// (prod b_j) (d/dt) log 0Fs(b; t); an independent oracle for the 0Fm family.
SeriesTrunc log_derivative_ratio_0Fs(const std::vector<Rat>& b, int N);

}  // namespace bcflab::hyper
