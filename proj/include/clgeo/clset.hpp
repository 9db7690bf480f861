#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clgeo/geometry.hpp"
#include "clgeo/numbers.hpp"
#include "clgeo/spreads.hpp"

namespace clgeo {

/**
 * A candidate Cameron-Liebler k-set: a duplicate-free, sorted collection of
 * k-subspace IDs. The parameter x = |L| / gauss(n,k,q) is always recomputed
 * from the member count.
 */
struct KSet {
    Geometry g;
    int k;
    std::vector<int> members;  // sorted, duplicate-free

    int size() const { return static_cast<int>(members.size()); }
    Rational parameter() const;
    bool contains_id(int id) const;
};

// Largest possible parameter: all k-subspaces of the geometry.
Rational max_parameter(const Geometry& g, int k);

// Normalizing constructor: sorts, deduplicates, and checks ID range.
KSet make_kset(const Geometry& g, int k, std::vector<int> members);

KSet make_empty(const Geometry& g, int k);
KSet make_pencil(const Geometry& g, int k, const Subspace& p);
// All k-spaces inside the hyperplane H. PG only.
KSet make_hyperplane_set(const Geometry& g, int k, const Subspace& H);
// pencil(p) ∪ hyperplane_set(H); requires p outside H.
KSet make_union(const Geometry& g, int k, const Subspace& p, const Subspace& H);
KSet complement(const KSet& L);

/// Outcome of one verifier; failing reports always carry a witness.
struct VerifierReport {
    int definition;  // 1..4
    bool pass;
    std::optional<int> witness;  // k-space / spread / kernel-vector index
    std::string detail;
    bool exhaustive_spreads = true;  // meaningful for definition 4 only
};

// (1) characteristic vector lies in the row space of the point-(k-space)
// incidence matrix.
VerifierReport verify_def1(const KSet& L);

// (2) disjointness counts. PG: for every k-space K the number of members
// disjoint from K is (x - chi(K)) * gauss(n-k-1,k,q) * q^{k^2+k}.
// AG (k = 1 only): the count is (q^2 (q^{n-2}-1)/(q-1) + 1)(x - chi(l)) and
// every direction carries exactly x member lines.
VerifierReport verify_def2(const KSet& L);

// (3) meet-in-(k-i)-space counts for i = 1..k+1. PG only.
VerifierReport verify_def3(const KSet& L);

// (4) |L ∩ S| = x for each supplied spread. PG requires (k+1) | (n+1).
VerifierReport verify_def4(const KSet& L, const std::vector<Spread>& spreads,
                           bool exhaustive);

// Members of L contained in pi, re-indexed in the geometry of pi
// (PG(dim pi, q) or AG(dim pi, q)). Requires dim(pi) >= k+1.
KSet restrict_to(const KSet& L, const Subspace& pi);

// AG -> projective closure; parameters agree.
KSet to_projective(const KSet& L);

// PG -> AG with respect to the hyperplane H; every member must avoid H.
KSet to_affine(const KSet& L, const Subspace& H);

}  // namespace clgeo
