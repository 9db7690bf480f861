#pragma once

#include <vector>

#include "clgeo/numbers.hpp"

namespace clgeo {

/**
 * Dense matrix with exact rational entries. No floating point anywhere;
 * rank, kernel and row-space membership are over the rationals.
 */
class ExactMatrix;

/// Reduced row echelon form (zero rows dropped) and its pivot columns.
struct Echelon {
    std::vector<Rational> rref;  // rank x cols, row-major
    int rank = 0;
    int cols = 0;
    std::vector<int> pivots;  // pivot column per rref row

    const Rational& at(int r, int c) const { return rref[static_cast<std::size_t>(r) * cols + c]; }
};

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    int rank() const;

    Echelon echelon() const;

    // Basis of {v : M v = 0}; size = cols - rank.
    std::vector<std::vector<Rational>> kernel_basis() const;

    // Pivot columns of the RREF: rank() column indices on which every
    // row-space vector is uniquely determined. Deterministic.
    std::vector<int> independent_columns() const;

    // True iff v (length = cols) lies in the row space, i.e. v is
    // orthogonal to the kernel.
    bool in_row_space(const std::vector<Rational>& v) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

}  // namespace clgeo
