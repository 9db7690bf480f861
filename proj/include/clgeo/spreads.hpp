#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clgeo/geometry.hpp"

namespace clgeo {

/**
 * A k-spread: pairwise disjoint k-subspaces partitioning the point set.
 * Members are IDs into SubspaceTable(g, k).
 */
struct Spread {
    Geometry g;
    int k;
    std::vector<int> members;  // sorted
};

struct SpreadValidation {
    bool ok;
    std::optional<int> witness_point;  // uncovered or doubly covered point ID
    std::string reason;
};

SpreadValidation validate_spread(const Spread& s);

// The q^{n-k} cosets of a k-dimensional direction space W in AG(n,q).
Spread affine_parallel_spread(const Geometry& g, const GFMat& direction);

// The field-reduction spread of PG(n,q): points of PG((n+1)/(k+1)-1, q^{k+1})
// seen as k-spaces over GF(q). Requires (k+1) | (n+1) and q^{k+1} within the
// supported field table.
Spread desarguesian_spread(const Geometry& g, int k);

struct SpreadEnumeration {
    std::vector<Spread> spreads;
    bool exhaustive;  // true iff the backtracking tree was fully explored
};

// All k-spreads by lowest-uncovered-point backtracking, stopping after
// `cap` spreads (exhaustive=false in that case).
SpreadEnumeration enumerate_spreads(const Geometry& g, int k, long cap);

// Embeds a subspace of the sub-geometry of `pi` (PG(dim pi, q) or
// AG(dim pi, q)) back into the ambient space, using pi's canonical frame.
// Inverse of the restriction coordinate map.
Subspace embed_in_subspace(const Geometry& ambient, const Subspace& pi, const Subspace& sub);

}  // namespace clgeo
