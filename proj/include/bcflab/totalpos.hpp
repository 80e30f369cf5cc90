#pragma once

#include <optional>
#include <vector>

#include "bcflab/polymatrix.hpp"

namespace bcflab::totalpos {

struct TPWitness {
    std::vector<int> rows;
    std::vector<int> cols;
    MPoly minor;
};

struct TPReport {
    bool violated = false;
    int order = 0;               // the order the check was run at
    long long checked = 0;       // minors evaluated, in canonical order
    std::optional<TPWitness> witness;
};

struct TPOptions {
    bool early_exit = true;   // stop at the first (lexicographic) violation
    bool parallel = true;     // scan minors across threads
    bool progress = false;    // progress counts on stderr
};

// Entry (i,j) = seq[i+j+shift]; seq must supply indices up to
// 2(size-1)+shift, else IndexOutOfRange.
PolyMatrix hankel_matrix(const std::vector<MPoly>& seq, int size, int shift);

// Evaluates every k x k minor for 1 <= k <= min(r, dims) exactly, in the
// order: increasing size, then lexicographic row set, then lexicographic
// column set. The witness is the first failing minor in that order. Constant
// matrices take an integer fraction-free route. The scan is data-parallel;
// the reduction keeps the lexicographically first witness deterministic.
TPReport check_tp(const PolyMatrix& M, int r, const TPOptions& opts = {});

// Single-threaded reference scan, kept for testing and benchmarks.
TPReport check_tp_serial(const PolyMatrix& M, int r, const TPOptions& opts = {});

// Checks H(O_0(P)) = O(P) O(P^T)^T on the top-left N x N blocks, for any
// row/column-finite materialized P. Throws InsufficientMatrixSize when the
// materialized block cannot support the iteration exactly.
bool hankel_factorization_check(const PolyMatrix& P, int N);

}  // namespace bcflab::totalpos
