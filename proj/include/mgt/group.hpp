#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mgt/kernels.hpp"
#include "mgt/perm.hpp"

namespace mgt {

using Elem = std::int32_t;

// A finite group as an order x order multiplication table with the identity
// at index 0.  Every constructor validates the full set of group axioms
// (Latin square, identity, inverses, associativity over all order^3 triples)
// and, when permutation labels are present, that the table agrees with
// apply-first permutation composition.
class GroupTable {
public:
  static constexpr int kDefaultMaxOrder = 10368;

  // An empty placeholder (order 0); usable only after assignment from one
  // of the validated factories below.
  GroupTable() = default;

  // Validates and takes ownership of a flat row-major table.
  // Throws NotAGroupError with the first violating instance.
  static GroupTable from_mul_table(std::int32_t order, std::vector<std::int32_t> mul,
                                   std::optional<std::vector<Perm>> labels = std::nullopt,
                                   kernels::ExecMode mode = kernels::ExecMode::Auto);

  std::int32_t order() const { return order_; }

  // Checked table lookups; index out of range throws ArgumentError.
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;

  std::span<const std::int32_t> flat() const { return mul_; }
  const std::int32_t* raw() const { return mul_.data(); }
  // Unchecked lookup for inner loops.
  Elem at(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }

  bool has_labels() const { return labels_.has_value(); }
  const std::vector<Perm>& labels() const { return *labels_; }
  const Perm& label(Elem a) const { return (*labels_)[a]; }
  int degree() const { return labels_ ? (*labels_)[0].degree() : 0; }

  // Index of the element carrying this label, if any.
  std::optional<Elem> find_label(const Perm& p) const;

  // Cycle notation when labels are present, "#k" otherwise.
  std::string render(Elem a) const;

private:
  std::int32_t order_ = 0;
  std::vector<std::int32_t> mul_;
  std::vector<std::int32_t> inv_;
  std::optional<std::vector<Perm>> labels_;
};

// Free-function forms of the checked table lookups.
Elem multiply(const GroupTable& G, Elem a, Elem b);
Elem inverse(const GroupTable& G, Elem a);

// A subgroup of an ambient GroupTable, stored as the strictly increasing
// list of its ambient element indices (so elements[0] is the identity).
// The referenced ambient table must outlive the SubgroupRef.
struct SubgroupRef {
  const GroupTable* ambient = nullptr;
  std::vector<Elem> elements;

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(Elem g) const;
  // Position of g within elements, or -1.
  int index_of(Elem g) const;
};

// True iff `ref` satisfies the SubgroupRef invariants against its ambient
// table (sorted, in range, contains the identity, closed under mul and inv).
bool is_valid_subgroup(const SubgroupRef& ref);

// Smallest subgroup of G containing the given elements.
SubgroupRef subgroup_generated(const GroupTable& G, const std::vector<Elem>& gens);

// The trivial subgroup {identity}.
SubgroupRef trivial_subgroup(const GroupTable& G);

// Re-indexes a subgroup as a standalone GroupTable.  Element k of the result
// is ref.elements[k]; ambient labels, when present, are carried over.
GroupTable subgroup_table(const SubgroupRef& ref);

// Closure of permutation generators under apply-first composition, as a
// GroupTable in canonical element order (identity first, remaining elements
// sorted by image sequence).  Labels are always populated.
GroupTable group_from_generators(int degree, const std::vector<Perm>& gens,
                                 int max_order = GroupTable::kDefaultMaxOrder);

// Standard families.  All permutation-representable families carry labels
// and use canonical element order.
GroupTable cyclic_group(int n, int max_order = GroupTable::kDefaultMaxOrder);
GroupTable dihedral_group(int n, int max_order = GroupTable::kDefaultMaxOrder);
GroupTable symmetric_group(int n, int max_order = GroupTable::kDefaultMaxOrder);
GroupTable alternating_group(int n, int max_order = GroupTable::kDefaultMaxOrder);
GroupTable klein_four_group();
// Fixed 8x8 table for the quaternion group, element order
// [1, -1, i, -i, j, -j, k, -k]; no permutation labels.
GroupTable quaternion8_group();

// Direct product on index pairs, (a, b) at index a*|B| + b.  Labels are the
// disjoint-union permutations when both factors carry labels.
GroupTable direct_product(const GroupTable& A, const GroupTable& B,
                          int max_order = GroupTable::kDefaultMaxOrder);

}  // namespace mgt
