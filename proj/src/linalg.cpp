#include "clgeo/linalg.hpp"

#include <numeric>

namespace clgeo {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::numerator;

// Scale a rational row to a primitive integer vector (positive leading
// content removed).
std::vector<BigInt> to_primitive_int(const std::vector<Rational>& row) {
    BigInt l = 1;
    for (const auto& x : row) l = l / gcd(l, denominator(x)) * denominator(x);
    std::vector<BigInt> out(row.size());
    BigInt content = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
        out[j] = numerator(row[j]) * (l / denominator(row[j]));
        content = gcd(content, out[j]);
    }
    if (content > 1)
        for (auto& x : out) x /= content;
    return out;
}

void make_primitive(std::vector<BigInt>& row) {
    BigInt content = 0;
    for (const auto& x : row) {
        content = gcd(content, x);
        if (content == 1) break;
    }
    if (content > 1)
        for (auto& x : row) x /= content;
}

}  // namespace

Echelon ExactMatrix::echelon() const {
    // Fraction-free integer elimination on primitive rows; rational
    // normalization happens only once, at the end.
    std::vector<std::vector<BigInt>> w;
    w.reserve(rows_);
    for (int i = 0; i < rows_; ++i) {
        std::vector<Rational> row(a_.begin() + static_cast<std::size_t>(i) * cols_,
                                  a_.begin() + static_cast<std::size_t>(i + 1) * cols_);
        w.push_back(to_primitive_int(row));
    }

    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < static_cast<int>(w.size()); ++c) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(w.size()); ++i)
            if (w[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(w[piv], w[r]);
        for (int i = 0; i < static_cast<int>(w.size()); ++i) {
            if (i == r || w[i][c] == 0) continue;
            BigInt f = w[i][c], p = w[r][c];
            for (int j = 0; j < cols_; ++j) w[i][j] = w[i][j] * p - w[r][j] * f;
            make_primitive(w[i]);
        }
        pivots.push_back(c);
        ++r;
    }

    Echelon e;
    e.pivots = pivots;
    e.rank = r;
    e.cols = cols_;
    e.rref.resize(static_cast<std::size_t>(r) * cols_);
    for (int i = 0; i < r; ++i) {
        Rational p(w[i][pivots[i]]);
        for (int j = 0; j < cols_; ++j)
            e.rref[static_cast<std::size_t>(i) * cols_ + j] = Rational(w[i][j]) / p;
    }
    return e;
}

int ExactMatrix::rank() const { return echelon().rank; }

std::vector<int> ExactMatrix::independent_columns() const { return echelon().pivots; }

std::vector<std::vector<Rational>> ExactMatrix::kernel_basis() const {
    Echelon e = echelon();
    std::vector<bool> is_piv(cols_, false);
    for (int p : e.pivots) is_piv[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[f] = 1;
        for (int i = 0; i < e.rank; ++i) v[e.pivots[i]] = -e.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool ExactMatrix::in_row_space(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("in_row_space: length mismatch");
    for (const auto& w : kernel_basis()) {
        Rational dot = 0;
        for (int j = 0; j < cols_; ++j)
            if (!w[j].is_zero() && !v[j].is_zero()) dot += w[j] * v[j];
        if (!dot.is_zero()) return false;
    }
    return true;
}

}  // namespace clgeo
