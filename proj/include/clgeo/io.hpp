#pragma once

#include <iostream>
#include <utility>

#include "clgeo/clset.hpp"
#include "clgeo/spreads.hpp"

namespace clgeo {

/**
 * JSON-lines serialization. A file is one header record followed by one
 * record per member subspace (canonical basis matrix, plus the representative
 * point for affine flats). Parse errors carry the 1-based line number.
 */
void write_kset(std::ostream& out, const KSet& L);
KSet read_kset(std::istream& in);

void write_spread(std::ostream& out, const Spread& s, bool exhaustive);
std::pair<Spread, bool> read_spread(std::istream& in);

}  // namespace clgeo
