#pragma once

#include <string>
#include <vector>

#include "mgt/group.hpp"

namespace mgt {

// Parsed form of the textual group descriptor grammar:
//   cyclic:<n> | dihedral:<n> | symmetric:<n> | alternating:<n> | klein4
//   | quaternion8 | product:<spec>,<spec> | perm:<degree>:<cycles;cycles;...>
struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, Symmetric, Alternating, Klein4, Quaternion8, Product, Perm };

  Kind kind = Kind::Cyclic;
  int n = 0;                      // family parameter
  std::vector<GroupSpec> factors; // Product: exactly two
  int degree = 0;                 // Perm
  std::vector<Perm> gens;         // Perm

  // Canonical text form (re-rendered, not the raw input).
  std::string text() const;
};

// Throws ParseError on malformed input.
GroupSpec parse_group_spec(const std::string& text);

GroupTable build_group(const GroupSpec& spec, int max_order = GroupTable::kDefaultMaxOrder);

// Parses a comma-separated generator list for a group: cycle notation for
// groups with permutation labels (e.g. "(1 2)(3 4),(1 3)(2 4)") and "#k"
// element indices for any group.  "()" names the identity.
std::vector<Elem> parse_generator_list(const GroupTable& G, const std::string& text);

}  // namespace mgt
