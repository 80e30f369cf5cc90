#pragma once

#include <vector>

#include "bcflab/mpoly.hpp"

namespace bcflab {

// Dense rectangular matrix of MPoly entries.
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    static PolyMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const MPoly& at(int i, int j) const {
        return entries_.at(static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                           static_cast<std::size_t>(j));
    }
    MPoly& at(int i, int j) {
        return entries_.at(static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                           static_cast<std::size_t>(j));
    }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix transpose() const;
    PolyMatrix topleft(int r, int c) const;
    PolyMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

    bool operator==(const PolyMatrix& o) const;

    // True when every entry is a rational constant.
    bool all_constant() const;

private:
    int rows_, cols_;
    std::vector<MPoly> entries_;
};

// Exact determinant. Constant matrices take an integer fraction-free route;
// symbolic ones use Laplace expansion with shared subminors for n <= 5 and
// Bareiss elimination beyond that, falling back to expansion if an exact
// division fails. Throws NotSquare.
MPoly det_fraction_free(const PolyMatrix& m);

// Plain cofactor expansion, kept as an independent oracle for tests.
MPoly det_cofactor(const PolyMatrix& m);

// Bareiss elimination entry point, exposed for cross-checks.
MPoly det_bareiss(const PolyMatrix& m);

}  // namespace bcflab
