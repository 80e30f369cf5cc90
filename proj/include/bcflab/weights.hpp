#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "bcflab/mpoly.hpp"

namespace bcflab::bcf {

enum class Family { S, T, J };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::S: return "S";
        case Family::T: return "T";
        default: return "J";
    }
}

// Height-indexed weight supplier. S-kind supplies alpha_i (i >= m), T-kind
// alpha_i and delta_i, J-kind beta_i^(ell) for 0 <= ell <= m, i >= ell.
// Sources are either finite tables or closed forms; closed forms supply every
// index and memoize behind an internal lock, so a WeightSystem may be shared
// freely between threads.
class WeightSystem {
public:
    using AlphaFn = std::function<MPoly(long)>;
    using BetaFn = std::function<MPoly(int, long)>;

    Family kind() const;
    int m() const;

    MPoly alpha(long i) const;          // throws MissingWeight
    MPoly delta(long i) const;          // throws MissingWeight
    MPoly beta(int ell, long i) const;  // throws MissingWeight

    bool supplies_alpha(long i) const;
    bool supplies_delta(long i) const;
    bool supplies_beta(int ell, long i) const;

    // Tables index alpha_{m+pos} / delta_{m+pos} by position.
    static WeightSystem s_table(int m, std::vector<MPoly> alphas);
    static WeightSystem t_table(int m, std::vector<MPoly> alphas, std::vector<MPoly> deltas);
    static WeightSystem j_table(int m, std::map<std::pair<int, long>, MPoly> betas);

    // Closed forms supply every index unless an exclusive upper limit is set.
    static WeightSystem s_closed(int m, AlphaFn alpha, std::optional<long> limit = {});
    static WeightSystem t_closed(int m, AlphaFn alpha, AlphaFn delta,
                                 std::optional<long> limit = {});
    static WeightSystem j_closed(int m, BetaFn beta);

    // Fully symbolic weights: a{i}, d{i}, b{ell}_{i}.
    static WeightSystem s_generic(int m);
    static WeightSystem t_generic(int m);
    static WeightSystem j_generic(int m);

    // Same weights with every indeterminate substituted.
    WeightSystem substituted(const std::map<std::string, MPoly>& assignment) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit WeightSystem(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

}  // namespace bcflab::bcf
