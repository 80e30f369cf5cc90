#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bcflab/weights.hpp"

namespace bcflab::families {

using bcf::WeightSystem;

// ---- weight generators -----------------------------------------------------

// Pre-alpha sequence (1-indexed): either quasi-affine pre_{1+j+pk} = x_j + k u_j
// or an explicit finite table.
struct PreAlpha {
    std::vector<MPoly> x, u;   // closed form when x is nonempty (|u| == |x|)
    std::vector<MPoly> table;  // used when x is empty

    MPoly at(long idx1) const;                       // throws MissingWeight
    std::optional<long> limit() const;               // exclusive 1-based bound
    static PreAlpha repeat_blocks(int width, MPoly base, MPoly inc);  // base+k*inc, each k repeated width times
};

WeightSystem periodic_weights(int m, std::vector<MPoly> x);
WeightSystem eventually_periodic_weights(int m, std::vector<MPoly> prefix, std::vector<MPoly> x);
WeightSystem quasi_affine_weights(int m, std::vector<MPoly> x, std::vector<MPoly> u);
WeightSystem factorized_weights(int m, std::vector<MPoly> x, std::function<MPoly(long)> c);
// alpha_{m+k} = pre_{k+1} pre_{k+2} ... pre_{k+w}
WeightSystem prealpha_window_weights(int m, int window, PreAlpha pre);

// ---- Fuss-Narayana ----------------------------------------------------------

enum class FNVariant { Q, P, Qminus, Pminus };
MPoly fuss_narayana(FNVariant v, int m, int n, int k, const std::vector<MPoly>& x);

enum class FNTilde { Q, P, Qminus, Pminus };
MPoly fuss_narayana_tilde(FNTilde v, int m, int n, int k, const std::vector<MPoly>& y,
                          const std::vector<long>& mult);

// Generalized Narayana numbers T^{(p,p')}_{n,j} and the star variant.
Rat gen_narayana(int p, int p_prime, int n, int j, bool star);

// Multivariate Aval polynomial of order m in the supplied x_0..x_m.
MPoly aval(int m, int n, const std::vector<MPoly>& x);

// ---- multivariate Eulerian ---------------------------------------------------

enum class EuVariant { P, Q, Qnk, Pminus, Qminus, Qnkminus };

// x arity m+1 (positive variants) or m (negative); c defaults to all ones.
// With c == 1 the differential recurrences are used; otherwise the beta
// closed forms drive the J-triangle DP.
MPoly eulerian_mv(EuVariant v, int m, int n, int k, const std::vector<MPoly>& x,
                  std::function<MPoly(long)> c = nullptr);

// The factorized beta weights behind the Eulerian polynomials (positive type
// uses e_{l+1}, negative type h_{l+1}). The negative-type weights are not
// banded (h never vanishes), so path_m sets the largest fall size the
// returned J-system supplies; it defaults to m, which is exact for the
// positive type only.
WeightSystem eulerian_beta_weights(int m, const std::vector<MPoly>& x,
                                   std::function<MPoly(long)> c, bool negative,
                                   int path_m = -1);

// rth-order Eulerian polynomial A_n^{(r)} in the indeterminate "x"; the
// reversed variant is x^{n-1} A_n^{(r)}(1/x) for n >= 1.
MPoly rth_order_eulerian(int r, int n, bool reversed);

// ---- classical sequences ------------------------------------------------------

Rat catalan(int n);
Rat fuss_catalan(int p, int n);
Rat mschroeder_count(int m, int n);
Rat narayana_number(int n, int j);
Rat multifactorial(int r, int n);
MPoly stirling_cycle(int n, const MPoly& x, const MPoly& y);

// String-keyed dispatch used by the CLI; params are positional numbers.
// Throws UnknownId.
Rat classic_number(const std::string& id, int n, const std::vector<Rat>& params);

// ---- Gandhi / Genocchi ---------------------------------------------------------

// mth-order Gandhi polynomial in the indeterminate "y" (n >= 1).
MPoly gandhi(int m, int n);
// G_{2n+2}^{[m]} = Gandhi value at y = 1.
Rat genocchi(int m, int n);
// Conjectured weights: products of successive (m+1)-tuples of the pre-alphas
// y,..,y,1, y+1,..,y+1,2, ... (in the indeterminate "y").
WeightSystem gandhi_conjecture_weights(int m);

}  // namespace bcflab::families
