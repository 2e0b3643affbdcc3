#pragma once

#include <vector>

#include "mgt/group_spec.hpp"

namespace mgt {

struct CatalogEntry {
  GroupSpec spec;
  GroupTable table;
};

// The survey's reproducible group catalog: cyclic 1..24, dihedral 3..12,
// symmetric 3..4, alternating 4, klein4, quaternion8, and all binary direct
// products of the nontrivial base entries, truncated to order <= max_order
// and sorted by (order, spec text).
std::vector<CatalogEntry> build_catalog(int max_order);

}  // namespace mgt
