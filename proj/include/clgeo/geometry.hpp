#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "clgeo/field.hpp"
#include "clgeo/gfmat.hpp"
#include "clgeo/numbers.hpp"

namespace clgeo {

enum class Kind { PG, AG };

/**
 * Descriptor of PG(n,q) or AG(n,q). Points of PG(n,q) are the rank-1
 * subspaces of GF(q)^{n+1}; points of AG(n,q) are the vectors of GF(q)^n.
 */
struct Geometry {
    Kind kind;
    int n;
    const Field* F;

    Geometry(Kind kind_, int n_, const Field& f) : kind(kind_), n(n_), F(&f) {
        if (n_ < 1) throw std::invalid_argument("Geometry: n must be >= 1");
    }

    int q() const { return F->q(); }
    bool operator==(const Geometry& o) const {
        return kind == o.kind && n == o.n && F->p() == o.F->p() && F->e() == o.F->e();
    }

    BigInt num_points() const;
    BigInt num_subspaces(int k) const;
};

/**
 * Canonical k-subspace. PG: a (k+1)x(n+1) basis in reduced row echelon form.
 * AG: a k x n direction matrix in RREF plus the representative point with
 * zeros in all pivot coordinates of the direction space. Two subspaces are
 * equal as point sets iff their encodings are identical.
 */
struct Subspace {
    Kind kind;
    int k;
    GFMat basis;               // PG basis rows, or AG direction rows
    std::vector<felem> point;  // AG representative; empty for PG

    const Field& field() const { return *basis.F; }
    int ambient_n() const { return kind == Kind::PG ? basis.cols - 1 : basis.cols; }

    std::vector<felem> encoding() const;
    bool operator==(const Subspace& o) const;
    std::strong_ordering operator<=>(const Subspace& o) const;
};

// Gaussian binomial coefficient: the number of a-dimensional vector
// subspaces of GF(q)^b. Returns 0 when a > b; throws on negative input
// or q < 2.
BigInt gauss_binomial(int b, int a, int q);

// Canonicalizing constructors. Rows may be any (possibly dependent)
// spanning set; the result is the canonical form. The claimed dimension is
// derived from the rank.
Subspace make_pg_subspace(const Geometry& g, const GFMat& rows);
Subspace make_ag_flat(const Geometry& g, const GFMat& direction, const std::vector<felem>& point);
Subspace make_pg_point(const Geometry& g, const std::vector<felem>& coords);
Subspace make_ag_point(const Geometry& g, const std::vector<felem>& coords);

// Complete, duplicate-free, deterministically ordered list of k-subspaces.
std::vector<Subspace> enumerate_subspaces(const Geometry& g, int k);

// True iff the point (k = 0) lies in s. Throws on mixed geometries.
bool incident(const Geometry& g, const Subspace& p, const Subspace& s);

// True iff inner is contained in outer (as point sets).
bool contains(const Subspace& outer, const Subspace& inner);

// Join of two subspaces.
Subspace span(const Geometry& g, const Subspace& a, const Subspace& b);

// Meet; nullopt when the intersection is empty (PG: dim -1; AG: disjoint
// flats).
std::optional<Subspace> intersect(const Geometry& g, const Subspace& a, const Subspace& b);

// Embedding of an affine k-flat into the projective closure PG(n,q),
// with the hyperplane at infinity x_0 = 0 and affine point v at (1 : v).
Subspace projective_closure(const Geometry& ag, const Subspace& flat);
Geometry closure_geometry(const Geometry& ag);

// Inverse of projective_closure for subspaces not inside x_0 = 0.
Subspace affine_part(const Geometry& ag, const Subspace& pg_subspace);

// The (k-1)-dimensional direction space of an affine flat, as a canonical
// RREF matrix (parallel flats share it).
const GFMat& direction_space(const Subspace& flat);

/// Cached enumeration of all k-subspaces with an encoding -> ID index.
class SubspaceTable {
public:
    static const SubspaceTable& get(const Geometry& g, int k);

    const Geometry& geometry() const { return g_; }
    int k() const { return k_; }
    const std::vector<Subspace>& all() const { return list_; }
    int size() const { return static_cast<int>(list_.size()); }
    const Subspace& at(int id) const { return list_.at(id); }

    // ID of a canonical subspace; throws if it is not a k-subspace here.
    int id_of(const Subspace& s) const;

private:
    SubspaceTable(const Geometry& g, int k);
    Geometry g_;
    int k_;
    std::vector<Subspace> list_;
    std::vector<std::pair<std::vector<felem>, int>> index_;  // sorted by encoding
};

}  // namespace clgeo
