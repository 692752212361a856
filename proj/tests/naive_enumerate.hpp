#pragma once

// Test-only reference enumerator.  Generates every labeled lattice whose
// numeric order is a linear extension, every involution map, every identity
// element and every symmetric fusion table (only neutrality and bottom
// absorption are pre-filled), filters by the axioms directly, and dedupes by
// canonical form at the very end.  No isomorph rejection and no search-tree
// pruning happen on the way, so agreement with the pipelined enumerator is
// meaningful evidence of its completeness.  Feasible for sizes <= 5.

#include "dmm/enumerate.hpp"
#include "dmm/morphisms.hpp"

#include <vector>

namespace dmm::testing {

std::vector<CanonicalForm> naive_enumerate(const ConstraintBundle& bundle);

}  // namespace dmm::testing
