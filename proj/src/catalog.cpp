#include "mgt/catalog.hpp"

#include <algorithm>

#include "mgt/error.hpp"

namespace mgt {

namespace {

GroupSpec family(GroupSpec::Kind kind, int n = 0) {
  GroupSpec spec;
  spec.kind = kind;
  spec.n = n;
  return spec;
}

}  // namespace

std::vector<CatalogEntry> build_catalog(int max_order) {
  if (max_order < 1) throw ArgumentError("catalog max order must be at least 1");

  std::vector<GroupSpec> base;
  for (int n = 1; n <= 24; ++n)
    if (n <= max_order) base.push_back(family(GroupSpec::Kind::Cyclic, n));
  for (int n = 3; n <= 12; ++n)
    if (2 * n <= max_order) base.push_back(family(GroupSpec::Kind::Dihedral, n));
  for (int n = 3; n <= 4; ++n) {
    int order = 1;
    for (int i = 2; i <= n; ++i) order *= i;
    if (order <= max_order) base.push_back(family(GroupSpec::Kind::Symmetric, n));
  }
  if (12 <= max_order) base.push_back(family(GroupSpec::Kind::Alternating, 4));
  if (4 <= max_order) base.push_back(family(GroupSpec::Kind::Klein4));
  if (8 <= max_order) base.push_back(family(GroupSpec::Kind::Quaternion8));

  std::vector<CatalogEntry> entries;
  for (const GroupSpec& spec : base) entries.push_back(CatalogEntry{spec, build_group(spec)});

  // Binary direct products of nontrivial base entries, unordered (the first
  // factor is the earlier base entry).
  const size_t base_count = entries.size();
  for (size_t i = 0; i < base_count; ++i) {
    if (entries[i].table.order() < 2) continue;
    for (size_t j = i; j < base_count; ++j) {
      if (entries[j].table.order() < 2) continue;
      const std::int64_t order =
          static_cast<std::int64_t>(entries[i].table.order()) * entries[j].table.order();
      if (order > max_order) continue;
      GroupSpec spec;
      spec.kind = GroupSpec::Kind::Product;
      spec.factors = {entries[i].spec, entries[j].spec};
      entries.push_back(CatalogEntry{spec, build_group(spec)});
    }
  }

  std::sort(entries.begin(), entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.table.order() != b.table.order()) return a.table.order() < b.table.order();
    return a.spec.text() < b.spec.text();
  });
  return entries;
}

}  // namespace mgt
