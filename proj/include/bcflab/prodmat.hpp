#pragma once

#include "bcflab/bcf.hpp"
#include "bcflab/polymatrix.hpp"

namespace bcflab::prodmat {

using bcf::Family;
using bcf::Triangle;
using bcf::WeightSystem;

enum class ProductionKind {
    SEven,       // L ... L U*  (even contraction of an m-S-fraction)
    SOdd,        // U* L ... L  (odd contraction)
    RT,          // restricted Thron, by walk-segment enumeration
    RTOdd,       // odd restricted Thron (delta_i = 0 at i = m mod m+1); experimental
    J,           // the (m,1)-banded matrix P^(m)(beta)
    PeriodicAZ,  // period-(m+1) S-weights: elementary-symmetric entries
};

struct ProductionSpec {
    ProductionKind kind;
    int m;
    WeightSystem weights;  // S/T weights, or J weights for kind J
    int size;              // rows = cols to materialize
};

// Materializes the production matrix (unit superdiagonal, lower-Hessenberg).
PolyMatrix build_production(const ProductionSpec& spec);

// Single entry, computed without materializing the whole matrix.
MPoly production_entry(const ProductionSpec& spec, int i, int j);

// Iterates a_{n,k} = sum_i a_{n-1,i} P_{i,k} with a_{0,k} = delta_{0k}.
// Requires P unit-superdiagonal lower-Hessenberg with rows >= N and
// cols >= N+1; throws InsufficientMatrixSize / Error otherwise.
Triangle output_matrix(const PolyMatrix& P, int N);

// Reads contracted J-weights off the even (P^{(m)S}) or odd (P^{(m)S'})
// production matrix: beta_i^{(i-j)} = P_{i,j}.
enum class ContractKind { Even, Odd };
WeightSystem contract(ContractKind kind, int m, const WeightSystem& s_weights);

// T_xi^{-1} P T_xi truncated to size. The generic route needs P materialized
// with at least size+1 columns (throws TruncationUnsafe); the spec overload
// uses the closed-form bidiagonal conjugation rules.
PolyMatrix conjugate_by_Txi(const PolyMatrix& P, const MPoly& xi, int size);
PolyMatrix conjugate_by_Txi(const ProductionSpec& spec, const MPoly& xi, int size);

// Lower-triangular Toeplitz matrix of powers of xi, materialized to size.
PolyMatrix toeplitz_Txi(const MPoly& xi, int size);

// Checks that P has AZ shape (Toeplitz except the zeroth column) and that its
// output matrix matches the Riordan array [t^n] f(t) g(t)^k obtained by the
// fixed-point iteration g = t A(g), f = f0 / (1 - t Z(g)). Throws NotAZShape.
bool riordan_verify(const PolyMatrix& P, int N);

}  // namespace bcflab::prodmat
