#include "clgeo/spreads.hpp"

#include <algorithm>

namespace clgeo {

namespace {

// Sorted point-ID list of every k-subspace.
std::vector<std::vector<int>> point_lists(const Geometry& g, int k) {
    const auto& points = SubspaceTable::get(g, 0);
    const auto& spaces = SubspaceTable::get(g, k);
    std::vector<std::vector<int>> lists(spaces.size());
    for (int c = 0; c < spaces.size(); ++c)
        for (int r = 0; r < points.size(); ++r)
            if (incident(g, points.at(r), spaces.at(c))) lists[c].push_back(r);
    return lists;
}

// Injective field homomorphism GF(q) -> GF(Q) for q = p^e, Q = q^m, as an
// index map. For prime q the constants embed identically; otherwise a short
// search over elements of multiplicative order q-1 finds the embedding.
std::vector<felem> subfield_embedding(const Field& small, const Field& big) {
    const int q = small.q();
    std::vector<felem> phi(q, 0);
    if (small.e() == 1) {
        for (int c = 0; c < q; ++c) phi[c] = static_cast<felem>(c);  // constants
        return phi;
    }
    // generator of GF(q)*
    felem gen = 0;
    for (int a = 2; a < q; ++a) {
        felem x = static_cast<felem>(a);
        int ord = 1;
        while (x != 1) {
            x = small.mul(x, static_cast<felem>(a));
            ++ord;
        }
        if (ord == q - 1) {
            gen = static_cast<felem>(a);
            break;
        }
    }
    for (int u = 2; u < big.q(); ++u) {
        // candidate image of gen must have order exactly q-1
        felem x = static_cast<felem>(u);
        int ord = 1;
        while (x != 1) {
            x = big.mul(x, static_cast<felem>(u));
            ++ord;
        }
        if (ord != q - 1) continue;
        phi.assign(q, 0);
        phi[1] = 1;
        felem gpow = 1, upow = 1;
        for (int i = 1; i < q - 1; ++i) {
            gpow = small.mul(gpow, gen);
            upow = big.mul(upow, static_cast<felem>(u));
            phi[gpow] = upow;
        }
        bool additive = true;
        for (int a = 0; a < q && additive; ++a)
            for (int b = 0; b < q && additive; ++b)
                additive = phi[small.add(static_cast<felem>(a), static_cast<felem>(b))] ==
                           big.add(phi[a], phi[b]);
        if (additive) return phi;
    }
    throw std::logic_error("subfield_embedding: no embedding found");
}

}  // namespace

SpreadValidation validate_spread(const Spread& s) {
    const auto& points = SubspaceTable::get(s.g, 0);
    const auto& spaces = SubspaceTable::get(s.g, s.k);
    std::vector<int> cover(points.size(), 0);
    for (int id : s.members)
        for (int r = 0; r < points.size(); ++r)
            if (incident(s.g, points.at(r), spaces.at(id))) ++cover[r];
    for (int r = 0; r < points.size(); ++r) {
        if (cover[r] == 0) return {false, r, "uncovered point"};
        if (cover[r] > 1) return {false, r, "doubly covered point"};
    }
    return {true, std::nullopt, ""};
}

Spread affine_parallel_spread(const Geometry& g, const GFMat& direction) {
    if (g.kind != Kind::AG)
        throw std::invalid_argument("affine_parallel_spread: affine geometry required");
    GFMat dir = row_space_canonical(direction);
    const int k = dir.rows;
    if (k < 1 || k >= g.n)
        throw std::invalid_argument("affine_parallel_spread: direction dimension out of range");
    const auto& table = SubspaceTable::get(g, k);
    const int q = g.q();

    std::vector<bool> is_piv(g.n, false);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < g.n; ++j)
            if (dir.at(i, j) != 0) {
                is_piv[j] = true;
                break;
            }
    std::vector<int> free_coord;
    for (int j = 0; j < g.n; ++j)
        if (!is_piv[j]) free_coord.push_back(j);

    Spread s{g, k, {}};
    std::vector<int> digits(free_coord.size(), 0);
    for (;;) {
        std::vector<felem> rep(g.n, 0);
        for (std::size_t t = 0; t < free_coord.size(); ++t)
            rep[free_coord[t]] = static_cast<felem>(digits[t]);
        s.members.push_back(table.id_of(make_ag_flat(g, dir, rep)));
        int pos = static_cast<int>(digits.size()) - 1;
        while (pos >= 0 && digits[pos] == q - 1) digits[pos--] = 0;
        if (pos < 0) break;
        ++digits[pos];
    }
    std::sort(s.members.begin(), s.members.end());
    return s;
}

Spread desarguesian_spread(const Geometry& g, int k) {
    if (g.kind != Kind::PG) throw std::invalid_argument("desarguesian_spread: PG required");
    if ((g.n + 1) % (k + 1) != 0)
        throw std::invalid_argument("desarguesian_spread: (k+1) must divide (n+1)");
    const Field& Fq = *g.F;
    const Field& FQ = Field::get(Fq.p(), Fq.e() * (k + 1));
    const int m = (g.n + 1) / (k + 1);
    const int q = Fq.q(), Q = FQ.q();

    auto phi = subfield_embedding(Fq, FQ);

    // GF(q)-basis of GF(Q), greedily extended.
    std::vector<felem> basis;
    std::vector<bool> in_span(Q, false);
    in_span[0] = true;
    std::vector<felem> span{0};
    while (static_cast<int>(basis.size()) < k + 1) {
        felem cand = 0;
        for (int x = 1; x < Q; ++x)
            if (!in_span[x]) {
                cand = static_cast<felem>(x);
                break;
            }
        basis.push_back(cand);
        std::vector<felem> grown;
        for (felem s : span)
            for (int c = 0; c < q; ++c) {
                felem v = FQ.add(s, FQ.mul(phi[c], cand));
                if (!in_span[v]) {
                    in_span[v] = true;
                    grown.push_back(v);
                }
            }
        span.insert(span.end(), grown.begin(), grown.end());
    }

    // coordinates of each GF(Q) element over the basis
    std::vector<std::vector<felem>> coords(Q);
    {
        std::vector<int> digits(k + 1, 0);
        for (;;) {
            felem v = 0;
            std::vector<felem> c(k + 1);
            for (int i = 0; i <= k; ++i) {
                c[i] = static_cast<felem>(digits[i]);
                v = FQ.add(v, FQ.mul(phi[digits[i]], basis[i]));
            }
            coords[v] = c;
            int pos = k;
            while (pos >= 0 && digits[pos] == q - 1) digits[pos--] = 0;
            if (pos < 0) break;
            ++digits[pos];
        }
    }

    const auto& table = SubspaceTable::get(g, k);
    Spread s{g, k, {}};

    // projective points of GF(Q)^m, first nonzero coordinate normalized to 1
    std::vector<int> v(m, 0);
    auto emit = [&](const std::vector<int>& pt) {
        GFMat rows(Fq, 0, g.n + 1);
        for (int i = 0; i <= k; ++i) {
            std::vector<felem> row(g.n + 1, 0);
            for (int j = 0; j < m; ++j) {
                felem w = FQ.mul(basis[i], static_cast<felem>(pt[j]));
                const auto& c = coords[w];
                for (int t = 0; t <= k; ++t) row[j * (k + 1) + t] = c[t];
            }
            rows.append_row(row);
        }
        s.members.push_back(table.id_of(make_pg_subspace(g, rows)));
    };
    for (int lead = 0; lead < m; ++lead) {
        std::fill(v.begin(), v.end(), 0);
        v[lead] = 1;
        std::vector<int> digits(m - lead - 1, 0);
        for (;;) {
            for (std::size_t t = 0; t < digits.size(); ++t) v[lead + 1 + t] = digits[t];
            emit(v);
            int pos = static_cast<int>(digits.size()) - 1;
            while (pos >= 0 && digits[pos] == Q - 1) digits[pos--] = 0;
            if (pos < 0) break;
            ++digits[pos];
        }
    }
    std::sort(s.members.begin(), s.members.end());
    return s;
}

SpreadEnumeration enumerate_spreads(const Geometry& g, int k, long cap) {
    const auto& spaces = SubspaceTable::get(g, k);
    const int npoints = static_cast<int>(SubspaceTable::get(g, 0).size());
    auto lists = point_lists(g, k);
    std::vector<std::vector<int>> through(npoints);
    for (int c = 0; c < spaces.size(); ++c)
        for (int p : lists[c]) through[p].push_back(c);

    SpreadEnumeration out{{}, true};
    std::vector<bool> covered(npoints, false);
    std::vector<int> chosen;
    int uncovered = npoints;

    auto rec = [&](auto&& self) -> bool {  // returns false when cap is hit
        if (uncovered == 0) {
            Spread s{g, k, chosen};
            std::sort(s.members.begin(), s.members.end());
            out.spreads.push_back(std::move(s));
            return static_cast<long>(out.spreads.size()) < cap;
        }
        int p = 0;
        while (covered[p]) ++p;
        for (int c : through[p]) {
            bool ok = true;
            for (int pt : lists[c])
                if (covered[pt]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (int pt : lists[c]) covered[pt] = true;
            uncovered -= static_cast<int>(lists[c].size());
            chosen.push_back(c);
            bool keep_going = self(self);
            chosen.pop_back();
            for (int pt : lists[c]) covered[pt] = false;
            uncovered += static_cast<int>(lists[c].size());
            if (!keep_going) return false;
        }
        return true;
    };
    out.exhaustive = rec(rec);
    return out;
}

Subspace embed_in_subspace(const Geometry& ambient, const Subspace& pi, const Subspace& sub) {
    const Field& F = *ambient.F;
    if (ambient.kind == Kind::PG) {
        GFMat rows(F, 0, ambient.n + 1);
        for (int i = 0; i < sub.basis.rows; ++i) {
            std::vector<felem> r(ambient.n + 1, 0);
            for (int a = 0; a < sub.basis.cols; ++a)
                for (int j = 0; j <= ambient.n; ++j)
                    r[j] = F.add(r[j], F.mul(sub.basis.at(i, a), pi.basis.at(a, j)));
            rows.append_row(r);
        }
        return make_pg_subspace(ambient, rows);
    }
    // AG: direction rows through pi's direction frame, representative offset
    // from pi's representative.
    GFMat dir(F, 0, ambient.n);
    for (int i = 0; i < sub.basis.rows; ++i) {
        std::vector<felem> r(ambient.n, 0);
        for (int a = 0; a < pi.basis.rows; ++a)
            for (int j = 0; j < ambient.n; ++j)
                r[j] = F.add(r[j], F.mul(sub.basis.at(i, a), pi.basis.at(a, j)));
        dir.append_row(r);
    }
    std::vector<felem> rep = pi.point;
    for (int a = 0; a < pi.basis.rows; ++a)
        for (int j = 0; j < ambient.n; ++j)
            rep[j] = F.add(rep[j], F.mul(sub.point[a], pi.basis.at(a, j)));
    return make_ag_flat(ambient, dir, rep);
}

}  // namespace clgeo
