#include "clgeo/clset.hpp"

#include <algorithm>
#include <map>

#include "clgeo/incidence.hpp"

namespace clgeo {

namespace {

int chi(const KSet& L, int id) { return L.contains_id(id) ? 1 : 0; }

// projective dimension of the intersection of two PG subspaces (-1 = empty)
int meet_dim(const Subspace& a, const Subspace& b) {
    return row_space_intersection(a.basis, b.basis).rows - 1;
}

}  // namespace

Rational KSet::parameter() const {
    return Rational(BigInt(members.size()), gauss_binomial(g.n, k, g.q()));
}

bool KSet::contains_id(int id) const {
    return std::binary_search(members.begin(), members.end(), id);
}

Rational max_parameter(const Geometry& g, int k) {
    const BigInt q = g.q();
    if (g.kind == Kind::PG)
        return Rational(pow_int(q, g.n + 1) - 1, pow_int(q, k + 1) - 1);
    return Rational(pow_int(q, g.n - k));
}

KSet make_kset(const Geometry& g, int k, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    const int total = SubspaceTable::get(g, k).size();
    if (!members.empty() && (members.front() < 0 || members.back() >= total))
        throw std::out_of_range("make_kset: member ID out of range");
    return KSet{g, k, std::move(members)};
}

KSet make_empty(const Geometry& g, int k) { return make_kset(g, k, {}); }

KSet make_pencil(const Geometry& g, int k, const Subspace& p) {
    if (p.k != 0) throw std::invalid_argument("make_pencil: p must be a point");
    const auto& table = SubspaceTable::get(g, k);
    std::vector<int> ids;
    for (int c = 0; c < table.size(); ++c)
        if (incident(g, p, table.at(c))) ids.push_back(c);
    return make_kset(g, k, std::move(ids));
}

KSet make_hyperplane_set(const Geometry& g, int k, const Subspace& H) {
    if (g.kind != Kind::PG)
        throw std::invalid_argument("make_hyperplane_set: no affine analogue");
    if (H.k != g.n - 1)
        throw std::invalid_argument("make_hyperplane_set: H must be a hyperplane");
    const auto& table = SubspaceTable::get(g, k);
    std::vector<int> ids;
    for (int c = 0; c < table.size(); ++c)
        if (contains(H, table.at(c))) ids.push_back(c);
    return make_kset(g, k, std::move(ids));
}

KSet make_union(const Geometry& g, int k, const Subspace& p, const Subspace& H) {
    if (incident(g, p, H)) throw std::invalid_argument("make_union: p must avoid H");
    KSet a = make_pencil(g, k, p);
    KSet b = make_hyperplane_set(g, k, H);
    std::vector<int> ids = a.members;
    ids.insert(ids.end(), b.members.begin(), b.members.end());
    return make_kset(g, k, std::move(ids));
}

KSet complement(const KSet& L) {
    const int total = SubspaceTable::get(L.g, L.k).size();
    std::vector<int> ids;
    ids.reserve(total - L.size());
    for (int c = 0; c < total; ++c)
        if (!L.contains_id(c)) ids.push_back(c);
    return KSet{L.g, L.k, std::move(ids)};
}

VerifierReport verify_def1(const KSet& L) {
    const auto& space = IncidenceSpace::get(L.g, L.k);
    const auto& kernel = space.kernel();
    for (int i = 0; i < static_cast<int>(kernel.size()); ++i) {
        Rational dot = 0;
        for (int id : L.members) dot += kernel[i][id];
        if (!dot.is_zero())
            return {1, false, i, "characteristic vector not orthogonal to kernel vector", true};
    }
    return {1, true, std::nullopt, "", true};
}

VerifierReport verify_def2(const KSet& L) {
    const Geometry& g = L.g;
    const int q = g.q();
    const Rational x = L.parameter();
    const auto& table = SubspaceTable::get(g, L.k);

    if (g.kind == Kind::PG) {
        const BigInt scale =
            gauss_binomial(g.n - L.k - 1, L.k, q) * pow_int(q, L.k * L.k + L.k);
        for (int K = 0; K < table.size(); ++K) {
            int disjoint = 0;
            for (int id : L.members)
                if (meet_dim(table.at(K), table.at(id)) < 0) ++disjoint;
            if (Rational(disjoint) != (x - chi(L, K)) * Rational(scale))
                return {2, false, K, "disjointness count off", true};
        }
        return {2, true, std::nullopt, "", true};
    }

    if (L.k != 1)
        throw std::invalid_argument("verify_def2: affine case supports k = 1 only");
    const Rational scale =
        Rational(BigInt(q) * q * (pow_int(q, g.n - 2) - 1), q - 1) + 1;
    for (int K = 0; K < table.size(); ++K) {
        int disjoint = 0;
        for (int id : L.members)
            if (!intersect(g, table.at(K), table.at(id)).has_value()) ++disjoint;
        if (Rational(disjoint) != (x - chi(L, K)) * scale)
            return {2, false, K, "disjointness count off", true};
    }
    // every point at infinity (= line direction) carries exactly x members
    std::map<std::vector<felem>, int> per_direction;
    for (int c = 0; c < table.size(); ++c) per_direction[direction_space(table.at(c)).a] = 0;
    for (int id : L.members) ++per_direction[direction_space(table.at(id)).a];
    for (const auto& [dir, count] : per_direction)
        if (Rational(count) != x) {
            // witness: some line with the offending direction
            for (int c = 0; c < table.size(); ++c)
                if (direction_space(table.at(c)).a == dir)
                    return {2, false, c, "direction does not carry x member lines", true};
        }
    return {2, true, std::nullopt, "", true};
}

VerifierReport verify_def3(const KSet& L) {
    const Geometry& g = L.g;
    if (g.kind != Kind::PG) throw std::invalid_argument("verify_def3: PG only");
    const int q = g.q(), k = L.k, n = g.n;
    const Rational x = L.parameter();
    const auto& table = SubspaceTable::get(g, k);

    for (int K = 0; K < table.size(); ++K) {
        std::vector<int> count(k + 2, 0);  // count[i]: members meeting K in a (k-i)-space
        for (int id : L.members) {
            if (id == K) continue;
            int i = k - meet_dim(table.at(K), table.at(id));
            count[i] += 1;
        }
        const bool in = L.contains_id(K);
        for (int i = 1; i <= k + 1; ++i) {
            const BigInt tail =
                pow_int(q, i * (i - 1)) * gauss_binomial(n - k - 1, i - 1, q);
            Rational expected;
            if (in) {
                // (x-1)(q^{k+1}-1)/(q^{k-i+1}-1) * gauss(k,i) = (x-1) gauss(k+1,i),
                // which also covers the empty-intersection case i = k+1.
                expected = ((x - 1) * Rational(gauss_binomial(k + 1, i, q)) +
                            Rational(pow_int(q, i) * (pow_int(q, n - k) - 1),
                                     pow_int(q, i) - 1) *
                                Rational(gauss_binomial(k, i, q))) *
                           Rational(tail);
            } else {
                expected = x * Rational(tail * gauss_binomial(k + 1, i, q));
            }
            if (Rational(count[i]) != expected)
                return {3, false, K, "meet-in-(k-i)-space count off at i=" + std::to_string(i),
                        true};
        }
    }
    return {3, true, std::nullopt, "", true};
}

VerifierReport verify_def4(const KSet& L, const std::vector<Spread>& spreads,
                           bool exhaustive) {
    if (L.g.kind == Kind::PG && (L.g.n + 1) % (L.k + 1) != 0)
        throw std::invalid_argument("verify_def4: PG(n,q) has k-spreads iff (k+1) | (n+1)");
    const Rational x = L.parameter();
    for (int i = 0; i < static_cast<int>(spreads.size()); ++i) {
        int hits = 0;
        for (int id : spreads[i].members)
            if (L.contains_id(id)) ++hits;
        if (Rational(hits) != x)
            return {4, false, i, "spread intersection differs from parameter", exhaustive};
    }
    return {4, true, std::nullopt, "", exhaustive};
}

KSet restrict_to(const KSet& L, const Subspace& pi) {
    const Geometry& g = L.g;
    if (pi.k < L.k + 1) throw std::invalid_argument("restrict_to: dim(pi) must exceed k");
    Geometry sub(g.kind, pi.k, *g.F);
    const auto& table = SubspaceTable::get(g, L.k);
    const auto& subtable = SubspaceTable::get(sub, L.k);
    const Field& F = *g.F;

    std::vector<int> ids;
    for (int id : L.members) {
        const Subspace& s = table.at(id);
        if (!contains(pi, s)) continue;
        if (g.kind == Kind::PG) {
            GFMat rows(F, 0, pi.k + 1);
            for (int i = 0; i < s.basis.rows; ++i)
                rows.append_row(*solve_left(pi.basis, s.basis.row(i)));
            ids.push_back(subtable.id_of(make_pg_subspace(sub, rows)));
        } else {
            GFMat dir(F, 0, pi.k);
            for (int i = 0; i < s.basis.rows; ++i)
                dir.append_row(*solve_left(pi.basis, s.basis.row(i)));
            std::vector<felem> diff(g.n);
            for (int j = 0; j < g.n; ++j) diff[j] = F.add(s.point[j], F.neg(pi.point[j]));
            ids.push_back(subtable.id_of(make_ag_flat(sub, dir, *solve_left(pi.basis, diff))));
        }
    }
    return make_kset(sub, L.k, std::move(ids));
}

KSet to_projective(const KSet& L) {
    const Geometry& ag = L.g;
    if (ag.kind != Kind::AG) throw std::invalid_argument("to_projective: AG input required");
    Geometry pg = closure_geometry(ag);
    const auto& table = SubspaceTable::get(ag, L.k);
    const auto& pgtable = SubspaceTable::get(pg, L.k);
    std::vector<int> ids;
    for (int id : L.members)
        ids.push_back(pgtable.id_of(projective_closure(ag, table.at(id))));
    return make_kset(pg, L.k, std::move(ids));
}

KSet to_affine(const KSet& L, const Subspace& H) {
    const Geometry& pg = L.g;
    if (pg.kind != Kind::PG) throw std::invalid_argument("to_affine: PG input required");
    if (H.k != pg.n - 1) throw std::invalid_argument("to_affine: H must be a hyperplane");
    const Field& F = *pg.F;
    Geometry ag(Kind::AG, pg.n, F);
    const auto& table = SubspaceTable::get(pg, L.k);
    const auto& agtable = SubspaceTable::get(ag, L.k);

    // coordinate frame sending H to the hyperplane x_0 = 0: first row a
    // standard basis vector outside H, then H's canonical basis. With
    // H = {x_0 = 0} the frame is the identity, making the closure round trip
    // exact.
    GFMat T(F, 0, pg.n + 1);
    {
        std::vector<felem> e(pg.n + 1, 0);
        int j = 0;
        for (; j <= pg.n; ++j) {
            std::fill(e.begin(), e.end(), 0);
            e[j] = 1;
            if (!in_row_space(H.basis, e)) break;
        }
        std::fill(e.begin(), e.end(), 0);
        e[j] = 1;
        T.append_row(e);
        for (int i = 0; i < H.basis.rows; ++i) T.append_row(H.basis.row(i));
    }

    std::vector<int> ids;
    for (int id : L.members) {
        const Subspace& s = table.at(id);
        if (contains(H, s))
            throw std::invalid_argument("to_affine: member contained in H");
        GFMat rows(F, 0, pg.n + 1);
        for (int i = 0; i < s.basis.rows; ++i)
            rows.append_row(*solve_left(T, s.basis.row(i)));
        ids.push_back(agtable.id_of(affine_part(ag, make_pg_subspace(pg, rows))));
    }
    return make_kset(ag, L.k, std::move(ids));
}

}  // namespace clgeo
