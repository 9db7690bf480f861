#pragma once

#include <optional>
#include <vector>

#include "clgeo/field.hpp"

namespace clgeo {

/// Dense row-major matrix over a fixed GF(q).
struct GFMat {
    const Field* F = nullptr;
    int rows = 0;
    int cols = 0;
    std::vector<felem> a;

    GFMat() = default;
    GFMat(const Field& f, int r, int c) : F(&f), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    felem& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    felem at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    void append_row(const std::vector<felem>& row);
    std::vector<felem> row(int r) const { return {a.begin() + static_cast<std::size_t>(r) * cols, a.begin() + static_cast<std::size_t>(r + 1) * cols}; }
};

// In-place reduced row echelon form; returns the rank and fills `pivots`
// (when non-null) with the pivot column of each of the first rank rows.
// Zero rows sink to the bottom.
int rref(GFMat& m, std::vector<int>* pivots = nullptr);

// Rows of `m` with zero rows removed, in RREF. Canonical encoding of the
// row space: equal row spaces produce bitwise identical matrices.
GFMat row_space_canonical(const GFMat& m);

// Reduces `v` against the RREF matrix `basis`; the remainder is zero iff
// v lies in the row space.
bool in_row_space(const GFMat& basis, std::vector<felem> v);

// Solves x * A = b (x a row vector of length A.rows). Returns one solution
// or nullopt when inconsistent.
std::optional<std::vector<felem>> solve_left(const GFMat& A, const std::vector<felem>& b);

// Intersection of the row spaces of `u` and `v` (Zassenhaus), canonical.
GFMat row_space_intersection(const GFMat& u, const GFMat& v);

}  // namespace clgeo
