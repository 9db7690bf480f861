#include "clgeo/gfmat.hpp"

#include <cassert>

namespace clgeo {

void GFMat::append_row(const std::vector<felem>& row) {
    assert(static_cast<int>(row.size()) == cols);
    a.insert(a.end(), row.begin(), row.end());
    ++rows;
}

int rref(GFMat& m, std::vector<int>* pivots) {
    const Field& F = *m.F;
    if (pivots) pivots->clear();
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i) {
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        felem s = F.inv(m.at(r, c));
        for (int j = c; j < m.cols; ++j) m.at(r, j) = F.mul(s, m.at(r, j));
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            felem f = m.at(i, c);
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

GFMat row_space_canonical(const GFMat& m) {
    GFMat t = m;
    int r = rref(t);
    GFMat out(*m.F, r, m.cols);
    std::copy(t.a.begin(), t.a.begin() + static_cast<std::size_t>(r) * m.cols, out.a.begin());
    return out;
}

bool in_row_space(const GFMat& basis, std::vector<felem> v) {
    const Field& F = *basis.F;
    for (int i = 0; i < basis.rows; ++i) {
        int piv = -1;
        for (int j = 0; j < basis.cols; ++j) {
            if (basis.at(i, j) != 0) {
                piv = j;
                break;
            }
        }
        if (piv < 0) continue;
        felem f = v[piv];
        if (f == 0) continue;
        for (int j = piv; j < basis.cols; ++j) v[j] = F.sub(v[j], F.mul(f, basis.at(i, j)));
    }
    for (felem x : v)
        if (x != 0) return false;
    return true;
}

std::optional<std::vector<felem>> solve_left(const GFMat& A, const std::vector<felem>& b) {
    // Augment A^T with b and eliminate: x * A = b <=> A^T x^T = b^T.
    const Field& F = *A.F;
    GFMat aug(F, A.cols, A.rows + 1);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) aug.at(j, i) = A.at(i, j);
    for (int j = 0; j < A.cols; ++j) aug.at(j, A.rows) = b[j];

    std::vector<int> pivots;
    int r = rref(aug, &pivots);
    std::vector<felem> x(A.rows, 0);
    for (int i = 0; i < r; ++i) {
        if (pivots[i] == A.rows) return std::nullopt;  // inconsistent
        x[pivots[i]] = aug.at(i, A.rows);
    }
    return x;
}

GFMat row_space_intersection(const GFMat& u, const GFMat& v) {
    // Zassenhaus: RREF of [U U; V 0]; rows with a zero left block carry the
    // intersection in the right block.
    const Field& F = *u.F;
    int c = u.cols;
    GFMat z(F, u.rows + v.rows, 2 * c);
    for (int i = 0; i < u.rows; ++i)
        for (int j = 0; j < c; ++j) z.at(i, j) = z.at(i, j + c) = u.at(i, j);
    for (int i = 0; i < v.rows; ++i)
        for (int j = 0; j < c; ++j) z.at(u.rows + i, j) = v.at(i, j);

    int r = rref(z);
    GFMat inter(F, 0, c);
    for (int i = 0; i < r; ++i) {
        bool left_zero = true;
        for (int j = 0; j < c && left_zero; ++j) left_zero = z.at(i, j) == 0;
        if (!left_zero) continue;
        std::vector<felem> row(c);
        for (int j = 0; j < c; ++j) row[j] = z.at(i, j + c);
        inter.append_row(row);
    }
    return row_space_canonical(inter);
}

}  // namespace clgeo
