#include "mgt/group.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mgt/error.hpp"

namespace mgt {

namespace {

std::string elem_str(std::int32_t a) { return "#" + std::to_string(a); }

}  // namespace

GroupTable GroupTable::from_mul_table(std::int32_t order, std::vector<std::int32_t> mul,
                                      std::optional<std::vector<Perm>> labels,
                                      kernels::ExecMode mode) {
  if (order < 1) throw NotAGroupError("group order must be at least 1");
  if (mul.size() != static_cast<std::size_t>(order) * order)
    throw NotAGroupError("multiplication table has wrong shape");

  const std::int64_t n = order;
  // Latin square: every row and column is a permutation of 0..order-1.
  std::vector<char> seen(order);
  for (std::int64_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::int64_t b = 0; b < n; ++b) {
      const std::int32_t v = mul[a * n + b];
      if (v < 0 || v >= order)
        throw NotAGroupError("table entry out of range at " + elem_str(a) + "*" + elem_str(b));
      if (seen[v])
        throw NotAGroupError("row " + elem_str(a) + " is not a permutation (duplicate " +
                             elem_str(v) + ")");
      seen[v] = 1;
    }
  }
  for (std::int64_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::int64_t a = 0; a < n; ++a) {
      const std::int32_t v = mul[a * n + b];
      if (seen[v])
        throw NotAGroupError("column " + elem_str(b) + " is not a permutation (duplicate " +
                             elem_str(v) + ")");
      seen[v] = 1;
    }
  }
  // Identity at index 0.
  for (std::int64_t a = 0; a < n; ++a) {
    if (mul[a] != a || mul[a * n] != a)
      throw NotAGroupError("element 0 is not a two-sided identity at " + elem_str(a));
  }
  // Two-sided inverses.
  std::vector<std::int32_t> inv(order, -1);
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      if (mul[a * n + b] == 0 && mul[b * n + a] == 0) {
        inv[a] = static_cast<std::int32_t>(b);
        break;
      }
    }
    if (inv[a] < 0) throw NotAGroupError("no two-sided inverse for " + elem_str(a));
  }
  // Associativity, exhaustively over order^3 triples.
  auto bad = kernels::associativity_violations(mul.data(), order, 1, mode);
  if (!bad.empty()) {
    const auto& t = bad[0];
    throw NotAGroupError("associativity fails at a=" + elem_str(t[0]) + ", b=" + elem_str(t[1]) +
                         ", c=" + elem_str(t[2]));
  }
  // Label consistency: distinct valid bijections composing as the table says.
  if (labels) {
    if (labels->size() != static_cast<std::size_t>(order))
      throw NotAGroupError("label count does not match group order");
    const int degree = (*labels)[0].degree();
    for (std::int64_t a = 0; a < n; ++a) {
      const Perm& pa = (*labels)[a];
      if (pa.degree() != degree || !pa.is_valid())
        throw NotAGroupError("label of " + elem_str(a) + " is not a permutation");
    }
    if (!(*labels)[0].is_identity())
      throw NotAGroupError("label of the identity element is not the identity permutation");
    for (std::int64_t a = 0; a < n; ++a)
      for (std::int64_t b = a + 1; b < n; ++b)
        if ((*labels)[a] == (*labels)[b])
          throw NotAGroupError("labels of " + elem_str(a) + " and " + elem_str(b) + " coincide");
    for (std::int64_t a = 0; a < n; ++a) {
      for (std::int64_t b = 0; b < n; ++b) {
        if ((*labels)[a].compose((*labels)[b]) != (*labels)[mul[a * n + b]])
          throw NotAGroupError("table disagrees with permutation composition at " + elem_str(a) +
                               "*" + elem_str(b));
      }
    }
  }

  GroupTable G;
  G.order_ = order;
  G.mul_ = std::move(mul);
  G.inv_ = std::move(inv);
  G.labels_ = std::move(labels);
  return G;
}

Elem GroupTable::mul(Elem a, Elem b) const {
  if (a < 0 || a >= order_ || b < 0 || b >= order_)
    throw ArgumentError("element index out of range in mul(" + std::to_string(a) + ", " +
                        std::to_string(b) + ")");
  return at(a, b);
}

Elem GroupTable::inv(Elem a) const {
  if (a < 0 || a >= order_)
    throw ArgumentError("element index out of range in inv(" + std::to_string(a) + ")");
  return inv_[a];
}

std::optional<Elem> GroupTable::find_label(const Perm& p) const {
  if (!labels_) return std::nullopt;
  for (std::int32_t i = 0; i < order_; ++i)
    if ((*labels_)[i] == p) return i;
  return std::nullopt;
}

std::string GroupTable::render(Elem a) const {
  if (labels_) return format_cycles((*labels_)[a]);
  return elem_str(a);
}

Elem multiply(const GroupTable& G, Elem a, Elem b) { return G.mul(a, b); }

Elem inverse(const GroupTable& G, Elem a) { return G.inv(a); }

bool SubgroupRef::contains(Elem g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

int SubgroupRef::index_of(Elem g) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), g);
  if (it == elements.end() || *it != g) return -1;
  return static_cast<int>(it - elements.begin());
}

bool is_valid_subgroup(const SubgroupRef& ref) {
  if (!ref.ambient || ref.elements.empty()) return false;
  const GroupTable& G = *ref.ambient;
  if (ref.elements[0] != 0) return false;
  for (size_t i = 0; i < ref.elements.size(); ++i) {
    const Elem a = ref.elements[i];
    if (a < 0 || a >= G.order()) return false;
    if (i > 0 && ref.elements[i - 1] >= a) return false;
  }
  for (Elem a : ref.elements) {
    if (!ref.contains(G.inv(a))) return false;
    for (Elem b : ref.elements)
      if (!ref.contains(G.at(a, b))) return false;
  }
  return true;
}

SubgroupRef subgroup_generated(const GroupTable& G, const std::vector<Elem>& gens) {
  for (Elem g : gens)
    if (g < 0 || g >= G.order())
      throw ArgumentError("generator index " + std::to_string(g) + " out of range");
  // Words in the generators form a subgroup of a finite group, so closing
  // the identity under right multiplication by generators is enough.
  std::vector<char> present(G.order(), 0);
  std::vector<Elem> members{0};
  present[0] = 1;
  for (size_t head = 0; head < members.size(); ++head) {
    for (Elem g : gens) {
      const Elem x = G.at(members[head], g);
      if (!present[x]) {
        present[x] = 1;
        members.push_back(x);
      }
    }
  }
  std::sort(members.begin(), members.end());
  SubgroupRef ref{&G, std::move(members)};
  if (G.order() % ref.size() != 0)
    throw Error("internal: generated subset size does not divide the group order");
  return ref;
}

SubgroupRef trivial_subgroup(const GroupTable& G) { return SubgroupRef{&G, {0}}; }

GroupTable subgroup_table(const SubgroupRef& ref) {
  if (!is_valid_subgroup(ref)) throw ArgumentError("subgroup_table: input is not a subgroup");
  const GroupTable& G = *ref.ambient;
  const std::int32_t n = ref.size();
  std::vector<std::int32_t> mul(static_cast<std::size_t>(n) * n);
  for (std::int32_t i = 0; i < n; ++i)
    for (std::int32_t j = 0; j < n; ++j)
      mul[static_cast<std::size_t>(i) * n + j] =
          ref.index_of(G.at(ref.elements[i], ref.elements[j]));
  std::optional<std::vector<Perm>> labels;
  if (G.has_labels()) {
    labels.emplace();
    labels->reserve(n);
    for (Elem g : ref.elements) labels->push_back(G.label(g));
  }
  return GroupTable::from_mul_table(n, std::move(mul), std::move(labels));
}

GroupTable group_from_generators(int degree, const std::vector<Perm>& gens, int max_order) {
  if (degree < 1) throw ArgumentError("degree must be at least 1");
  for (const Perm& g : gens) {
    if (g.degree() != degree)
      throw ArgumentError("generator degree " + std::to_string(g.degree()) +
                          " does not match declared degree " + std::to_string(degree));
    if (!g.is_valid()) throw ArgumentError("generator is not a bijection");
  }
  // Breadth-first closure under right composition by the generators.
  std::map<Perm, int> index;
  std::vector<Perm> elems{Perm::identity(degree)};
  index.emplace(elems[0], 0);
  for (size_t head = 0; head < elems.size(); ++head) {
    const Perm current = elems[head];
    for (const Perm& g : gens) {
      Perm next = current.compose(g);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (static_cast<int>(elems.size()) > max_order)
          throw SizeLimitError("closure exceeds the configured maximum order " +
                               std::to_string(max_order));
      }
    }
  }
  // Canonical order: identity first, rest sorted by image sequence.  The
  // identity is the lexicographically smallest bijection, so a plain sort
  // puts it at index 0.
  std::sort(elems.begin(), elems.end());
  index.clear();
  for (size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<int>(i));
  const std::int32_t n = static_cast<std::int32_t>(elems.size());
  std::vector<std::int32_t> mul(static_cast<std::size_t>(n) * n);
  for (std::int32_t a = 0; a < n; ++a)
    for (std::int32_t b = 0; b < n; ++b)
      mul[static_cast<std::size_t>(a) * n + b] = index.at(elems[a].compose(elems[b]));
  return GroupTable::from_mul_table(n, std::move(mul), std::move(elems));
}

GroupTable cyclic_group(int n, int max_order) {
  if (n < 1) throw ArgumentError("cyclic group order must be at least 1");
  if (n > max_order)
    throw SizeLimitError("cyclic order " + std::to_string(n) + " exceeds the maximum " +
                         std::to_string(max_order));
  if (n == 1) return group_from_generators(1, {});
  Perm shift = Perm::identity(n);
  for (int i = 0; i < n; ++i) shift.images[i] = (i + 1) % n;
  return group_from_generators(n, {shift}, max_order);
}

GroupTable dihedral_group(int n, int max_order) {
  if (n < 3) throw ArgumentError("dihedral parameter must be at least 3");
  if (2 * n > max_order)
    throw SizeLimitError("dihedral order " + std::to_string(2 * n) + " exceeds the maximum " +
                         std::to_string(max_order));
  Perm rot = Perm::identity(n);
  Perm refl = Perm::identity(n);
  for (int i = 0; i < n; ++i) {
    rot.images[i] = (i + 1) % n;
    refl.images[i] = (n - i) % n;
  }
  return group_from_generators(n, {rot, refl}, max_order);
}

namespace {

long long factorial_capped(int n, long long cap) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) {
    f *= i;
    if (f > cap) return f;
  }
  return f;
}

}  // namespace

GroupTable symmetric_group(int n, int max_order) {
  if (n < 1 || n > 8) throw ArgumentError("symmetric parameter must be in 1..8");
  if (factorial_capped(n, max_order) > max_order)
    throw SizeLimitError("symmetric:" + std::to_string(n) + " exceeds the maximum order " +
                         std::to_string(max_order));
  if (n == 1) return group_from_generators(1, {});
  Perm swap01 = Perm::identity(n);
  std::swap(swap01.images[0], swap01.images[1]);
  Perm cycle = Perm::identity(n);
  for (int i = 0; i < n; ++i) cycle.images[i] = (i + 1) % n;
  return group_from_generators(n, {swap01, cycle}, max_order);
}

GroupTable alternating_group(int n, int max_order) {
  if (n < 1 || n > 8) throw ArgumentError("alternating parameter must be in 1..8");
  if (n <= 2) return group_from_generators(std::max(n, 1), {});
  if (factorial_capped(n, max_order * 2LL) / 2 > max_order)
    throw SizeLimitError("alternating:" + std::to_string(n) + " exceeds the maximum order " +
                         std::to_string(max_order));
  // Standard 3-cycle generators (0 1 k), k = 2..n-1.
  std::vector<Perm> gens;
  for (int k = 2; k < n; ++k) {
    Perm g = Perm::identity(n);
    g.images[0] = 1;
    g.images[1] = k;
    g.images[k] = 0;
    gens.push_back(std::move(g));
  }
  return group_from_generators(n, gens, max_order);
}

GroupTable klein_four_group() {
  Perm a = Perm({1, 0, 3, 2});
  Perm b = Perm({2, 3, 0, 1});
  return group_from_generators(4, {a, b});
}

GroupTable quaternion8_group() {
  // Element i at index 2*axis + sign with axes [1, i, j, k]:
  // [1, -1, i, -i, j, -j, k, -k].  Products follow the quaternion relations
  // i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
  static constexpr int axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::int32_t> mul(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int ax = a / 2, bx = b / 2;
      const int sign = (a % 2) ^ (b % 2) ^ sign_mul[ax][bx];
      mul[static_cast<std::size_t>(a) * 8 + b] =
          static_cast<std::int32_t>(2 * axis_mul[ax][bx] + sign);
    }
  }
  return GroupTable::from_mul_table(8, std::move(mul));
}

GroupTable direct_product(const GroupTable& A, const GroupTable& B, int max_order) {
  const std::int64_t n = static_cast<std::int64_t>(A.order()) * B.order();
  if (n > max_order)
    throw SizeLimitError("product order " + std::to_string(n) + " exceeds the maximum " +
                         std::to_string(max_order));
  const std::int32_t nb = B.order();
  const std::int32_t order = static_cast<std::int32_t>(n);
  std::vector<std::int32_t> mul(static_cast<std::size_t>(order) * order);
  for (std::int32_t a1 = 0; a1 < A.order(); ++a1)
    for (std::int32_t b1 = 0; b1 < nb; ++b1)
      for (std::int32_t a2 = 0; a2 < A.order(); ++a2)
        for (std::int32_t b2 = 0; b2 < nb; ++b2) {
          const std::int32_t lhs = a1 * nb + b1;
          const std::int32_t rhs = a2 * nb + b2;
          mul[static_cast<std::size_t>(lhs) * order + rhs] =
              A.at(a1, a2) * nb + B.at(b1, b2);
        }
  std::optional<std::vector<Perm>> labels;
  if (A.has_labels() && B.has_labels()) {
    const int da = A.degree(), db = B.degree();
    labels.emplace();
    labels->reserve(order);
    for (std::int32_t a = 0; a < A.order(); ++a)
      for (std::int32_t b = 0; b < nb; ++b) {
        Perm p = Perm::identity(da + db);
        for (int i = 0; i < da; ++i) p.images[i] = A.label(a)[i];
        for (int i = 0; i < db; ++i) p.images[da + i] = da + B.label(b)[i];
        labels->push_back(std::move(p));
      }
  }
  return GroupTable::from_mul_table(order, std::move(mul), std::move(labels));
}

}  // namespace mgt
