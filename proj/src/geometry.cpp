#include "clgeo/geometry.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace clgeo {

namespace {

void check_same_geometry(const Geometry& g, const Subspace& s) {
    if (s.kind != g.kind || s.ambient_n() != g.n || !(s.field() == *g.F))
        throw std::invalid_argument("subspace does not live in this geometry");
}

// All r x c rank-r matrices in reduced row echelon form, in a fixed order:
// pivot column sets ascending lexicographically, free entries counted as a
// base-q odometer (first free position most significant).
template <typename Fn>
void enumerate_rref_matrices(const Field& F, int r, int c, Fn&& emit) {
    if (r == 0) {
        emit(GFMat(F, 0, c));
        return;
    }
    if (r > c) return;
    const int q = F.q();

    std::vector<int> piv(r);
    for (int i = 0; i < r; ++i) piv[i] = i;
    for (;;) {
        std::vector<bool> is_piv(c, false);
        for (int p : piv) is_piv[p] = true;
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < r; ++i)
            for (int j = piv[i] + 1; j < c; ++j)
                if (!is_piv[j]) free_pos.emplace_back(i, j);

        std::vector<int> digits(free_pos.size(), 0);
        for (;;) {
            GFMat m(F, r, c);
            for (int i = 0; i < r; ++i) m.at(i, piv[i]) = 1;
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                m.at(free_pos[t].first, free_pos[t].second) = static_cast<felem>(digits[t]);
            emit(std::move(m));

            int pos = static_cast<int>(digits.size()) - 1;
            while (pos >= 0 && digits[pos] == q - 1) digits[pos--] = 0;
            if (pos < 0) break;
            ++digits[pos];
        }

        // next pivot combination, lexicographic
        int i = r - 1;
        while (i >= 0 && piv[i] == c - r + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
    }
}

std::vector<felem> sub_vec(const Field& F, const std::vector<felem>& a, const std::vector<felem>& b) {
    std::vector<felem> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
    return r;
}

}  // namespace

BigInt gauss_binomial(int b, int a, int q) {
    if (a < 0 || b < 0) throw std::invalid_argument("gauss_binomial: negative input");
    if (q < 2) throw std::invalid_argument("gauss_binomial: q must be >= 2");
    if (a > b) return 0;
    BigInt num = 1, den = 1;
    for (int i = 0; i < a; ++i) {
        num *= pow_int(q, b - i) - 1;
        den *= pow_int(q, a - i) - 1;
    }
    return num / den;
}

BigInt Geometry::num_points() const {
    if (kind == Kind::PG) return gauss_binomial(n + 1, 1, q());
    return pow_int(q(), n);
}

BigInt Geometry::num_subspaces(int k) const {
    if (kind == Kind::PG) return gauss_binomial(n + 1, k + 1, q());
    return pow_int(q(), n - k) * gauss_binomial(n, k, q());
}

std::vector<felem> Subspace::encoding() const {
    std::vector<felem> e;
    e.reserve(basis.a.size() + point.size());
    e.insert(e.end(), basis.a.begin(), basis.a.end());
    e.insert(e.end(), point.begin(), point.end());
    return e;
}

bool Subspace::operator==(const Subspace& o) const {
    return kind == o.kind && k == o.k && basis.cols == o.basis.cols && basis.a == o.basis.a &&
           point == o.point;
}

std::strong_ordering Subspace::operator<=>(const Subspace& o) const {
    if (auto c = k <=> o.k; c != 0) return c;
    if (auto c = basis.a <=> o.basis.a; c != 0) return c;
    return point <=> o.point;
}

Subspace make_pg_subspace(const Geometry& g, const GFMat& rows) {
    if (g.kind != Kind::PG) throw std::invalid_argument("make_pg_subspace: affine geometry");
    GFMat canon = row_space_canonical(rows);
    if (canon.rows == 0) throw std::invalid_argument("make_pg_subspace: empty span");
    return Subspace{Kind::PG, canon.rows - 1, std::move(canon), {}};
}

Subspace make_ag_flat(const Geometry& g, const GFMat& direction, const std::vector<felem>& point) {
    if (g.kind != Kind::AG) throw std::invalid_argument("make_ag_flat: projective geometry");
    if (static_cast<int>(point.size()) != g.n)
        throw std::invalid_argument("make_ag_flat: bad point length");
    GFMat dir = direction.rows == 0 ? GFMat(*g.F, 0, g.n) : row_space_canonical(direction);
    const Field& F = *g.F;
    std::vector<felem> rep = point;
    for (int i = 0; i < dir.rows; ++i) {
        int piv = -1;
        for (int j = 0; j < dir.cols; ++j)
            if (dir.at(i, j) != 0) {
                piv = j;
                break;
            }
        felem f = rep[piv];
        if (f == 0) continue;
        for (int j = piv; j < dir.cols; ++j) rep[j] = F.sub(rep[j], F.mul(f, dir.at(i, j)));
    }
    int k = dir.rows;
    return Subspace{Kind::AG, k, std::move(dir), std::move(rep)};
}

Subspace make_pg_point(const Geometry& g, const std::vector<felem>& coords) {
    GFMat m(*g.F, 1, g.n + 1);
    if (static_cast<int>(coords.size()) != g.n + 1)
        throw std::invalid_argument("make_pg_point: bad length");
    for (int j = 0; j <= g.n; ++j) m.at(0, j) = coords[j];
    return make_pg_subspace(g, m);
}

Subspace make_ag_point(const Geometry& g, const std::vector<felem>& coords) {
    return make_ag_flat(g, GFMat(*g.F, 0, g.n), coords);
}

std::vector<Subspace> enumerate_subspaces(const Geometry& g, int k) {
    if (k < 0 || k >= g.n) throw std::out_of_range("enumerate_subspaces: k out of range");
    std::vector<Subspace> out;
    if (g.kind == Kind::PG) {
        enumerate_rref_matrices(*g.F, k + 1, g.n + 1, [&](GFMat m) {
            out.push_back(Subspace{Kind::PG, k, std::move(m), {}});
        });
        return out;
    }
    const int q = g.q();
    enumerate_rref_matrices(*g.F, k, g.n, [&](GFMat dir) {
        std::vector<bool> is_piv(g.n, false);
        for (int i = 0; i < dir.rows; ++i)
            for (int j = 0; j < g.n; ++j)
                if (dir.at(i, j) != 0) {
                    is_piv[j] = true;
                    break;
                }
        std::vector<int> free_coord;
        for (int j = 0; j < g.n; ++j)
            if (!is_piv[j]) free_coord.push_back(j);

        std::vector<int> digits(free_coord.size(), 0);
        for (;;) {
            std::vector<felem> rep(g.n, 0);
            for (std::size_t t = 0; t < free_coord.size(); ++t)
                rep[free_coord[t]] = static_cast<felem>(digits[t]);
            out.push_back(Subspace{Kind::AG, k, dir, std::move(rep)});

            int pos = static_cast<int>(digits.size()) - 1;
            while (pos >= 0 && digits[pos] == q - 1) digits[pos--] = 0;
            if (pos < 0) break;
            ++digits[pos];
        }
    });
    return out;
}

bool incident(const Geometry& g, const Subspace& p, const Subspace& s) {
    check_same_geometry(g, p);
    check_same_geometry(g, s);
    if (p.k != 0) throw std::invalid_argument("incident: first argument must be a point");
    if (g.kind == Kind::PG) return in_row_space(s.basis, p.basis.row(0));
    return in_row_space(s.basis, sub_vec(*g.F, p.point, s.point));
}

bool contains(const Subspace& outer, const Subspace& inner) {
    if (outer.kind != inner.kind || outer.basis.cols != inner.basis.cols)
        throw std::invalid_argument("contains: mixed geometries");
    for (int i = 0; i < inner.basis.rows; ++i)
        if (!in_row_space(outer.basis, inner.basis.row(i))) return false;
    if (outer.kind == Kind::AG)
        return in_row_space(outer.basis, sub_vec(*outer.basis.F, inner.point, outer.point));
    return true;
}

Subspace span(const Geometry& g, const Subspace& a, const Subspace& b) {
    check_same_geometry(g, a);
    check_same_geometry(g, b);
    if (g.kind == Kind::PG) {
        GFMat rows(*g.F, 0, g.n + 1);
        for (int i = 0; i < a.basis.rows; ++i) rows.append_row(a.basis.row(i));
        for (int i = 0; i < b.basis.rows; ++i) rows.append_row(b.basis.row(i));
        return make_pg_subspace(g, rows);
    }
    GFMat dir(*g.F, 0, g.n);
    for (int i = 0; i < a.basis.rows; ++i) dir.append_row(a.basis.row(i));
    for (int i = 0; i < b.basis.rows; ++i) dir.append_row(b.basis.row(i));
    dir.append_row(sub_vec(*g.F, b.point, a.point));
    return make_ag_flat(g, dir, a.point);
}

std::optional<Subspace> intersect(const Geometry& g, const Subspace& a, const Subspace& b) {
    check_same_geometry(g, a);
    check_same_geometry(g, b);
    if (g.kind == Kind::PG) {
        GFMat inter = row_space_intersection(a.basis, b.basis);
        if (inter.rows == 0) return std::nullopt;
        return Subspace{Kind::PG, inter.rows - 1, std::move(inter), {}};
    }
    // Common point: solve u*A + v*B = b.point - a.point over the stacked
    // direction rows, then meet the direction spaces.
    const Field& F = *g.F;
    GFMat stacked(F, 0, g.n);
    for (int i = 0; i < a.basis.rows; ++i) stacked.append_row(a.basis.row(i));
    for (int i = 0; i < b.basis.rows; ++i) stacked.append_row(b.basis.row(i));
    auto sol = solve_left(stacked, sub_vec(F, b.point, a.point));
    if (!sol) return std::nullopt;
    std::vector<felem> pt = a.point;
    for (int i = 0; i < a.basis.rows; ++i)
        for (int j = 0; j < g.n; ++j) pt[j] = F.add(pt[j], F.mul((*sol)[i], a.basis.at(i, j)));
    return make_ag_flat(g, row_space_intersection(a.basis, b.basis), pt);
}

Geometry closure_geometry(const Geometry& ag) {
    if (ag.kind != Kind::AG) throw std::invalid_argument("closure_geometry: expected AG");
    return Geometry(Kind::PG, ag.n, *ag.F);
}

Subspace projective_closure(const Geometry& ag, const Subspace& flat) {
    check_same_geometry(ag, flat);
    Geometry pg = closure_geometry(ag);
    GFMat rows(*ag.F, 0, ag.n + 1);
    std::vector<felem> top(ag.n + 1, 0);
    top[0] = 1;
    for (int j = 0; j < ag.n; ++j) top[j + 1] = flat.point[j];
    rows.append_row(top);
    for (int i = 0; i < flat.basis.rows; ++i) {
        std::vector<felem> r(ag.n + 1, 0);
        for (int j = 0; j < ag.n; ++j) r[j + 1] = flat.basis.at(i, j);
        rows.append_row(r);
    }
    return make_pg_subspace(pg, rows);
}

Subspace affine_part(const Geometry& ag, const Subspace& s) {
    if (ag.kind != Kind::AG) throw std::invalid_argument("affine_part: expected AG target");
    if (s.kind != Kind::PG || s.ambient_n() != ag.n || !(s.field() == *ag.F))
        throw std::invalid_argument("affine_part: subspace not in the projective closure");
    if (s.basis.at(0, 0) != 1)
        throw std::invalid_argument("affine_part: subspace lies in the hyperplane at infinity");
    std::vector<felem> rep(ag.n);
    for (int j = 0; j < ag.n; ++j) rep[j] = s.basis.at(0, j + 1);
    GFMat dir(*ag.F, 0, ag.n);
    for (int i = 1; i < s.basis.rows; ++i) {
        std::vector<felem> r(ag.n);
        for (int j = 0; j < ag.n; ++j) r[j] = s.basis.at(i, j + 1);
        dir.append_row(r);
    }
    return make_ag_flat(ag, dir, rep);
}

const GFMat& direction_space(const Subspace& flat) {
    if (flat.kind != Kind::AG) throw std::invalid_argument("direction_space: expected AG flat");
    return flat.basis;
}

SubspaceTable::SubspaceTable(const Geometry& g, int k) : g_(g), k_(k) {
    list_ = enumerate_subspaces(g, k);
    index_.reserve(list_.size());
    for (std::size_t i = 0; i < list_.size(); ++i)
        index_.emplace_back(list_[i].encoding(), static_cast<int>(i));
    std::sort(index_.begin(), index_.end());
}

int SubspaceTable::id_of(const Subspace& s) const {
    if (s.kind != g_.kind || s.k != k_) throw std::invalid_argument("id_of: wrong subspace type");
    auto key = s.encoding();
    auto it = std::lower_bound(index_.begin(), index_.end(), key,
                               [](const auto& a, const auto& b) { return a.first < b; });
    if (it == index_.end() || it->first != key)
        throw std::invalid_argument("id_of: subspace not found");
    return it->second;
}

const SubspaceTable& SubspaceTable::get(const Geometry& g, int k) {
    static std::mutex mtx;
    static std::map<std::tuple<Kind, int, int, int, int>, SubspaceTable> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_tuple(g.kind, g.n, g.F->p(), g.F->e(), k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, SubspaceTable(g, k)).first;
    return it->second;
}

}  // namespace clgeo
