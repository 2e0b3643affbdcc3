#pragma once

// Shared test utilities.  The oracle functions work directly on Perm image
// sequences and never touch GroupTable internals, so they stay independent
// of the table-based implementation paths they are used to check.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "mgt/group.hpp"
#include "mgt/group_spec.hpp"
#include "mgt/perm.hpp"

namespace mgt_test {

// Naive fixed-point closure: repeatedly add all pairwise products until
// stable.  Different algorithm from the library's generator BFS.
inline std::set<mgt::Perm> oracle_closure(int degree, const std::vector<mgt::Perm>& gens) {
  std::set<mgt::Perm> elems;
  elems.insert(mgt::Perm::identity(degree));
  for (const auto& g : gens) elems.insert(g);
  for (;;) {
    std::set<mgt::Perm> next = elems;
    for (const auto& a : elems)
      for (const auto& b : elems) next.insert(a.compose(b));
    if (next.size() == elems.size()) return elems;
    elems.swap(next);
  }
}

// Element index by cycle-notation label; fails the test when absent.
inline mgt::Elem elem(const mgt::GroupTable& G, const std::string& cycles) {
  const auto found = G.find_label(mgt::parse_cycles(cycles, G.degree()));
  REQUIRE_MESSAGE(found.has_value(), "element not found: " << cycles);
  return *found;
}

// Subgroup generated by cycle-notation generators.
inline mgt::SubgroupRef sub(const mgt::GroupTable& G, const std::vector<std::string>& gens) {
  std::vector<mgt::Elem> indices;
  for (const auto& g : gens) indices.push_back(elem(G, g));
  return mgt::subgroup_generated(G, indices);
}

inline std::vector<std::string> labels_of(const mgt::GroupTable& G,
                                          const std::vector<mgt::Elem>& elems) {
  std::vector<std::string> out;
  for (mgt::Elem e : elems) out.push_back(G.render(e));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mgt_test
