#include "doctest.h"

#include <random>
#include <set>

#include "clgeo/geometry.hpp"

using namespace clgeo;

namespace {

// Brute-force count of k-dimensional subspaces of GF(q)^b: canonicalize the
// span of every k-tuple of vectors and count distinct row spaces.
long count_subspaces_brute(const Field& F, int b, int k) {
    const int q = F.q();
    long total = 1;
    for (int i = 0; i < b; ++i) total *= q;

    std::set<std::vector<felem>> seen;
    std::vector<int> tuple(k, 0);
    for (;;) {
        GFMat m(F, k, b);
        for (int i = 0; i < k; ++i) {
            long v = tuple[i];
            for (int j = 0; j < b; ++j) {
                m.at(i, j) = static_cast<felem>(v % q);
                v /= q;
            }
        }
        GFMat canon = row_space_canonical(m);
        if (canon.rows == k) seen.insert(canon.a);

        int pos = k - 1;
        while (pos >= 0 && tuple[pos] == total - 1) tuple[pos--] = 0;
        if (pos < 0) break;
        ++tuple[pos];
    }
    return static_cast<long>(seen.size());
}

Subspace random_remix(std::mt19937& rng, const Geometry& g, const Subspace& s) {
    const Field& F = *g.F;
    std::uniform_int_distribution<int> coef(0, F.q() - 1);
    if (g.kind == Kind::PG) {
        GFMat rows(F, 0, g.n + 1);
        for (int t = 0; t < s.basis.rows + 2; ++t) {
            std::vector<felem> r(g.n + 1, 0);
            for (int i = 0; i < s.basis.rows; ++i) {
                felem c = static_cast<felem>(coef(rng));
                for (int j = 0; j <= g.n; ++j) r[j] = F.add(r[j], F.mul(c, s.basis.at(i, j)));
            }
            rows.append_row(r);
        }
        GFMat canon = row_space_canonical(rows);
        if (canon.rows != s.basis.rows) return s;  // degenerate mix, skip
        return make_pg_subspace(g, rows);
    }
    // AG: remix direction rows and translate the representative inside the flat.
    GFMat dir(F, 0, g.n);
    for (int t = 0; t < s.basis.rows + 2; ++t) {
        std::vector<felem> r(g.n, 0);
        for (int i = 0; i < s.basis.rows; ++i) {
            felem c = static_cast<felem>(coef(rng));
            for (int j = 0; j < g.n; ++j) r[j] = F.add(r[j], F.mul(c, s.basis.at(i, j)));
        }
        dir.append_row(r);
    }
    if (row_space_canonical(dir).rows != s.basis.rows) return s;
    std::vector<felem> pt = s.point;
    for (int i = 0; i < s.basis.rows; ++i) {
        felem c = static_cast<felem>(coef(rng));
        for (int j = 0; j < g.n; ++j) pt[j] = F.add(pt[j], F.mul(c, s.basis.at(i, j)));
    }
    return make_ag_flat(g, dir, pt);
}

}  // namespace

TEST_CASE("gauss binomial against brute-force subspace counts") {
    CHECK(count_subspaces_brute(Field::get(2, 1), 4, 2) == 35);
    CHECK(count_subspaces_brute(Field::get(3, 1), 4, 2) == 130);
    CHECK(gauss_binomial(4, 2, 2) == 35);
    CHECK(gauss_binomial(4, 2, 3) == 130);
    CHECK(gauss_binomial(7, 0, 2) == 1);
    CHECK(gauss_binomial(2, 4, 2) == 0);  // a > b degenerates to zero
    CHECK_THROWS_AS(gauss_binomial(-1, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(gauss_binomial(3, 1, 1), std::invalid_argument);
}

TEST_CASE("enumeration counts match closed forms") {
    for (int q : {2, 3}) {
        const Field& F = Field::get(q, 1);
        for (int n = 2; n <= 4; ++n) {
            Geometry pg(Kind::PG, n, F);
            Geometry ag(Kind::AG, n, F);
            for (int k = 0; k < n; ++k) {
                CHECK(BigInt(enumerate_subspaces(pg, k).size()) == pg.num_subspaces(k));
                CHECK(BigInt(enumerate_subspaces(ag, k).size()) == ag.num_subspaces(k));
            }
        }
    }
    Geometry pg52(Kind::PG, 5, Field::get(2, 1));
    CHECK(enumerate_subspaces(pg52, 1).size() == 651);
    CHECK(enumerate_subspaces(pg52, 2).size() == 1395);
    Geometry pg34(Kind::PG, 3, Field::get(2, 2));
    CHECK(BigInt(enumerate_subspaces(pg34, 1).size()) == gauss_binomial(4, 2, 4));
}

TEST_CASE("PG(3,2) has 35 lines and 15 points; AG(3,2) has 28 lines") {
    Geometry pg(Kind::PG, 3, Field::get(2, 1));
    Geometry ag(Kind::AG, 3, Field::get(2, 1));
    CHECK(enumerate_subspaces(pg, 1).size() == 35);
    CHECK(enumerate_subspaces(pg, 0).size() == 15);
    CHECK(enumerate_subspaces(ag, 1).size() == 28);
}

TEST_CASE("enumeration is duplicate-free") {
    Geometry ag(Kind::AG, 3, Field::get(3, 1));
    auto flats = enumerate_subspaces(ag, 1);
    std::set<std::vector<felem>> keys;
    for (const auto& s : flats) keys.insert(s.encoding());
    CHECK(keys.size() == flats.size());
}

TEST_CASE("points per line: q+1 projective, q affine") {
    for (int q : {2, 3}) {
        Geometry pg(Kind::PG, 3, Field::get(q, 1));
        Geometry ag(Kind::AG, 3, Field::get(q, 1));
        auto ppg = enumerate_subspaces(pg, 0);
        auto pag = enumerate_subspaces(ag, 0);
        for (const auto& line : enumerate_subspaces(pg, 1)) {
            int cnt = 0;
            for (const auto& p : ppg) cnt += incident(pg, p, line);
            CHECK(cnt == q + 1);
        }
        for (const auto& line : enumerate_subspaces(ag, 1)) {
            int cnt = 0;
            for (const auto& p : pag) cnt += incident(ag, p, line);
            CHECK(cnt == q);
        }
    }
}

TEST_CASE("canonicalization is invariant under basis remixing") {
    std::mt19937 rng(20240915);
    for (auto kind : {Kind::PG, Kind::AG}) {
        Geometry g(kind, 4, Field::get(3, 1));
        auto planes = enumerate_subspaces(g, 2);
        std::uniform_int_distribution<std::size_t> pick(0, planes.size() - 1);
        for (int t = 0; t < 200; ++t) {
            const Subspace& s = planes[pick(rng)];
            CHECK(random_remix(rng, g, s) == s);
        }
    }
}

TEST_CASE("span and meet: Grassmann identity in PG") {
    Geometry g(Kind::PG, 3, Field::get(2, 1));
    auto lines = enumerate_subspaces(g, 1);
    for (const auto& a : lines) {
        CHECK(*intersect(g, a, a) == a);
        for (const auto& b : lines) {
            auto meet = intersect(g, a, b);
            Subspace join = span(g, a, b);
            int dim_meet = meet ? meet->k : -1;
            CHECK(join.k + dim_meet == a.k + b.k);
            if (!meet) CHECK(join.k == 3);  // disjoint lines span the whole space
        }
    }
}

TEST_CASE("affine intersection of disjoint flats is empty") {
    Geometry g(Kind::AG, 3, Field::get(2, 1));
    auto lines = enumerate_subspaces(g, 1);
    auto points = enumerate_subspaces(g, 0);
    for (const auto& a : lines) {
        for (const auto& b : lines) {
            auto meet = intersect(g, a, b);
            int common = 0;
            for (const auto& p : points) common += incident(g, p, a) && incident(g, p, b);
            if (common == 0) CHECK(!meet);
            else if (common == 1) CHECK(meet->k == 0);
            else CHECK(*meet == a);
        }
    }
}

TEST_CASE("projective closure embeds AG(3,2) lines injectively") {
    Geometry ag(Kind::AG, 3, Field::get(2, 1));
    Geometry pg = closure_geometry(ag);
    auto lines = enumerate_subspaces(ag, 1);
    std::set<std::vector<felem>> images;
    for (const auto& l : lines) {
        Subspace c = projective_closure(ag, l);
        CHECK(c.k == 1);
        images.insert(c.encoding());
        CHECK(affine_part(ag, c) == l);
        // incidence preserved on affine points
        for (const auto& p : enumerate_subspaces(ag, 0)) {
            Subspace cp = projective_closure(ag, p);
            CHECK(incident(ag, p, l) == incident(pg, cp, c));
        }
    }
    CHECK(images.size() == lines.size());
    // lines of PG(3,2) not at infinity: 35 - 7
    CHECK(lines.size() == 35 - 7);
}

TEST_CASE("parallel flats share a direction space and closure at infinity") {
    Geometry ag(Kind::AG, 3, Field::get(2, 1));
    auto lines = enumerate_subspaces(ag, 1);
    for (const auto& a : lines) {
        for (const auto& b : lines) {
            bool parallel = direction_space(a).a == direction_space(b).a;
            Subspace ca = projective_closure(ag, a);
            Subspace cb = projective_closure(ag, b);
            // common point at infinity iff parallel (for distinct lines)
            if (parallel && !(a == b)) {
                auto meet = intersect(closure_geometry(ag), ca, cb);
                REQUIRE(meet);
                CHECK(meet->k == 0);
                CHECK(meet->basis.at(0, 0) == 0);  // at infinity
            }
        }
    }
}

TEST_CASE("mixed geometries are rejected") {
    Geometry pg(Kind::PG, 3, Field::get(2, 1));
    Geometry ag(Kind::AG, 3, Field::get(2, 1));
    auto pg_pts = enumerate_subspaces(pg, 0);
    auto ag_lines = enumerate_subspaces(ag, 1);
    CHECK_THROWS_AS(incident(pg, pg_pts[0], ag_lines[0]), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_subspaces(pg, 3), std::out_of_range);
    CHECK_THROWS_AS(enumerate_subspaces(pg, -1), std::out_of_range);
}
