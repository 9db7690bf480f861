#pragma once

#include <cstdint>
#include <vector>

#include "clgeo/geometry.hpp"
#include "clgeo/linalg.hpp"

namespace clgeo {

/**
 * Point-(k-space) 0/1 incidence matrix. Rows follow the point enumeration
 * order, columns the k-subspace IDs of SubspaceTable.
 */
struct IncidenceMatrix {
    Geometry g;
    int k;
    int rows, cols;
    std::vector<std::uint8_t> bits;  // row-major 0/1

    bool entry(int r, int c) const { return bits[static_cast<std::size_t>(r) * cols + c] != 0; }
    ExactMatrix to_exact() const;
};

IncidenceMatrix build_incidence(const Geometry& g, int k);

/**
 * Cached rational row-space data of the incidence matrix for one
 * (geometry, k). Kernel dot products are the hot path of verification and
 * search; everything here is immutable once built.
 */
class IncidenceSpace {
public:
    static const IncidenceSpace& get(const Geometry& g, int k);

    const IncidenceMatrix& matrix() const { return m_; }
    int rank() const { return echelon_.rank; }
    const Echelon& echelon() const { return echelon_; }
    const std::vector<std::vector<Rational>>& kernel() const { return kernel_; }
    const std::vector<int>& independent_columns() const { return echelon_.pivots; }

    // Row-space membership of the characteristic vector of a sorted,
    // duplicate-free member ID list.
    bool chi_in_row_space(const std::vector<int>& members) const;

private:
    IncidenceSpace(const Geometry& g, int k);
    IncidenceMatrix m_;
    Echelon echelon_;
    std::vector<std::vector<Rational>> kernel_;
};

}  // namespace clgeo
