#pragma once

#include <optional>
#include <vector>

#include "clgeo/clset.hpp"

namespace clgeo {

/**
 * Result of enumerating the 0/1 vectors of the incidence row space. Every
 * found set passes the row-space membership definition by construction; the
 * exhaustive flag is true only when the full assignment tree was covered
 * within the node budget.
 */
struct ClassificationRun {
    Geometry g;
    int k;
    std::vector<int> pivot_order;  // pivot columns in assignment order
    long long nodes = 0;
    std::vector<KSet> found;
    bool exhaustive = false;
    double seconds = 0.0;
};

// Enumerates all Cameron-Liebler k-sets by assigning {0,1} on the rank-many
// independent coordinates of the incidence matrix, cutting a subtree as soon
// as some dependent coordinate is forced outside {0,1}.
ClassificationRun classify(const Geometry& g, int k, long long budget);

// The deliberately expensive PG(3,3) line run (rank 40). Opt-in only.
ClassificationRun classify_stretch(long long budget);

struct CrossValidation {
    bool ok;
    std::optional<std::vector<int>> witness;  // offending member set
};

/**
 * Independent re-check of a classification run against spread intersections:
 * every found set must meet each spread in exactly its parameter, and no
 * spread-constant set reachable by plain re-enumeration (small ranks) or by
 * seeded randomized search may be missing from the output.
 */
CrossValidation cross_validate(const ClassificationRun& run,
                               const std::vector<Spread>& spreads,
                               unsigned seed = 1);

}  // namespace clgeo
