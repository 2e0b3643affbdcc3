#include "mgt/factorization.hpp"

#include <algorithm>
#include <set>

#include "mgt/error.hpp"

namespace mgt {

namespace {

void require_subgroup(const GroupTable& G, const SubgroupRef& S, const char* name) {
  if (S.ambient != &G) throw ArgumentError(std::string(name) + " does not reference this group");
  if (!is_valid_subgroup(S)) throw ArgumentError(std::string(name) + " is not a subgroup");
}

int intersection_size(const SubgroupRef& A, const SubgroupRef& B) {
  int count = 0;
  for (Elem a : A.elements)
    if (B.contains(a)) ++count;
  return count;
}

// The product set A*B when it has full size |A||B| and is closed under
// multiplication (hence a subgroup); empty otherwise.
std::vector<Elem> closed_product_set(const GroupTable& G, const SubgroupRef& A,
                                     const SubgroupRef& B) {
  std::vector<char> present(G.order(), 0);
  std::vector<Elem> set;
  set.reserve(static_cast<size_t>(A.size()) * B.size());
  for (Elem a : A.elements)
    for (Elem b : B.elements) {
      const Elem g = G.at(a, b);
      if (present[g]) return {};  // collision: |AB| < |A||B|
      present[g] = 1;
      set.push_back(g);
    }
  std::sort(set.begin(), set.end());
  for (Elem x : set)
    for (Elem y : set)
      if (!present[G.at(x, y)]) return {};  // not closed
  return set;
}

}  // namespace

bool is_exact_pair(const GroupTable& G, const SubgroupRef& M, const SubgroupRef& N) {
  require_subgroup(G, M, "M");
  require_subgroup(G, N, "N");
  if (static_cast<std::int64_t>(M.size()) * N.size() != G.order()) return false;
  return intersection_size(M, N) == 1;
}

PairFactorization build_pair_factorization(const GroupTable& G, const SubgroupRef& M,
                                           const SubgroupRef& N) {
  if (!is_exact_pair(G, M, N))
    throw NotExactError("subgroups do not exactly factorize the group (|M||N| = " +
                        std::to_string(static_cast<std::int64_t>(M.size()) * N.size()) +
                        ", |G| = " + std::to_string(G.order()) + ", |M n N| = " +
                        std::to_string(intersection_size(M, N)) + ")");
  PairFactorization pf;
  pf.G = &G;
  pf.M = M;
  pf.N = N;
  pf.decomp.assign(G.order(), MNParts{-1, -1});
  pf.decomp_rev.assign(G.order(), NMParts{-1, -1});
  for (std::int32_t i = 0; i < M.size(); ++i)
    for (std::int32_t j = 0; j < N.size(); ++j) {
      const Elem g = G.at(M.elements[i], N.elements[j]);
      if (pf.decomp[g].m >= 0)
        throw NotExactError("element " + G.render(g) + " has two m*n decompositions");
      pf.decomp[g] = MNParts{i, j};
      const Elem h = G.at(N.elements[j], M.elements[i]);
      if (pf.decomp_rev[h].m >= 0)
        throw NotExactError("element " + G.render(h) + " has two n*m decompositions");
      pf.decomp_rev[h] = NMParts{j, i};
    }
  // |M||N| = |G| and no collisions, so both tables are total.
  return pf;
}

std::vector<SubgroupRef> enumerate_subgroups(const GroupTable& G, int gen_bound) {
  if (gen_bound < 0) throw ArgumentError("generator-subset bound must be nonnegative");
  const std::int32_t n = G.order();
  std::set<std::vector<Elem>> seen;
  seen.insert(subgroup_generated(G, {}).elements);
  if (gen_bound >= 1) {
    for (Elem a = 0; a < n; ++a) seen.insert(subgroup_generated(G, {a}).elements);
  }
  if (gen_bound >= 2) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a + 1; b < n; ++b) seen.insert(subgroup_generated(G, {a, b}).elements);
  }
  if (gen_bound >= 3) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a + 1; b < n; ++b)
        for (Elem c = b + 1; c < n; ++c)
          seen.insert(subgroup_generated(G, {a, b, c}).elements);
  }
  if (gen_bound >= 4) {
    // Rarely needed; covers rank-4 elementary-abelian subgroups in larger
    // product groups.
    std::vector<std::vector<Elem>> base(seen.begin(), seen.end());
    for (const auto& elems : base)
      for (Elem d = 0; d < n; ++d) {
        std::vector<Elem> gens = elems;
        gens.push_back(d);
        seen.insert(subgroup_generated(G, gens).elements);
      }
  }
  // The whole group is always a subgroup of itself, even when it needs more
  // generators than the bound allows.
  std::vector<Elem> all(n);
  for (Elem g = 0; g < n; ++g) all[g] = g;
  seen.insert(std::move(all));

  std::vector<SubgroupRef> result;
  result.reserve(seen.size());
  for (const auto& elems : seen) result.push_back(SubgroupRef{&G, elems});
  std::sort(result.begin(), result.end(), [](const SubgroupRef& a, const SubgroupRef& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements < b.elements;
  });
  return result;
}

std::vector<std::pair<SubgroupRef, SubgroupRef>> enumerate_exact_pairs(
    const GroupTable& G, const std::vector<SubgroupRef>& subgroups, bool include_degenerate) {
  std::vector<std::pair<SubgroupRef, SubgroupRef>> pairs;
  for (const auto& M : subgroups)
    for (const auto& N : subgroups) {
      if (!include_degenerate && (M.size() == 1 || N.size() == 1)) continue;
      if (is_exact_pair(G, M, N)) pairs.emplace_back(M, N);
    }
  return pairs;
}

std::vector<std::pair<SubgroupRef, SubgroupRef>> enumerate_exact_pairs(const GroupTable& G,
                                                                       bool include_degenerate,
                                                                       int gen_bound) {
  return enumerate_exact_pairs(G, enumerate_subgroups(G, gen_bound), include_degenerate);
}

bool is_exact_triple(const GroupTable& G, const SubgroupRef& M, const SubgroupRef& N,
                     const SubgroupRef& P, TripleMode mode) {
  require_subgroup(G, M, "M");
  require_subgroup(G, N, "N");
  require_subgroup(G, P, "P");
  const std::int64_t product =
      static_cast<std::int64_t>(M.size()) * N.size() * P.size();
  if (product != G.order()) return false;
  std::vector<char> hit(G.order(), 0);
  for (Elem m : M.elements)
    for (Elem n : N.elements) {
      const Elem mn = G.at(m, n);
      for (Elem p : P.elements) {
        const Elem g = G.at(mn, p);
        if (hit[g]) return false;
        hit[g] = 1;
      }
    }
  if (mode == TripleMode::Strict) {
    if (closed_product_set(G, M, N).empty()) return false;
    if (closed_product_set(G, M, P).empty()) return false;
    if (closed_product_set(G, N, P).empty()) return false;
  }
  return true;
}

namespace {

// Positions of sub (a subgroup of G) inside super (another subgroup of G
// containing it), as a SubgroupRef of super's standalone table.
SubgroupRef embed_into(const SubgroupRef& sub, const SubgroupRef& super,
                       const GroupTable& super_tab) {
  SubgroupRef out;
  out.ambient = &super_tab;
  out.elements.reserve(sub.elements.size());
  for (Elem g : sub.elements) {
    const int pos = super.index_of(g);
    if (pos < 0) throw Error("internal: factor not contained in its product subgroup");
    out.elements.push_back(pos);
  }
  // super.elements is sorted, so positions of a sorted list stay sorted.
  return out;
}

}  // namespace

TripleFactorization build_triple_factorization(const GroupTable& G, const SubgroupRef& M,
                                               const SubgroupRef& N, const SubgroupRef& P,
                                               TripleMode mode) {
  if (!is_exact_triple(G, M, N, P, TripleMode::Relaxed))
    throw NotExactError("subgroups do not exactly factorize the group as MNP");
  TripleFactorization tf;
  tf.G = &G;
  tf.M = M;
  tf.N = N;
  tf.P = P;
  tf.mode = mode;
  tf.decomp3.assign(G.order(), TripleParts{-1, -1, -1});
  for (std::int32_t i = 0; i < M.size(); ++i)
    for (std::int32_t j = 0; j < N.size(); ++j) {
      const Elem mn = G.at(M.elements[i], N.elements[j]);
      for (std::int32_t k = 0; k < P.size(); ++k)
        tf.decomp3[G.at(mn, P.elements[k])] = TripleParts{i, j, k};
    }

  auto mn_set = closed_product_set(G, M, N);
  auto mp_set = closed_product_set(G, M, P);
  auto np_set = closed_product_set(G, N, P);
  tf.products_closed = !mn_set.empty() && !mp_set.empty() && !np_set.empty();
  if (mode == TripleMode::Strict && !tf.products_closed)
    throw NotExactError("a product set among MN, MP, NP is not a subgroup (strict mode)");

  if (tf.products_closed) {
    tf.MN = SubgroupRef{&G, std::move(mn_set)};
    tf.MP = SubgroupRef{&G, std::move(mp_set)};
    tf.NP = SubgroupRef{&G, std::move(np_set)};
    tf.MNtab = std::make_unique<GroupTable>(subgroup_table(tf.MN));
    tf.MPtab = std::make_unique<GroupTable>(subgroup_table(tf.MP));
    tf.NPtab = std::make_unique<GroupTable>(subgroup_table(tf.NP));
    tf.pairMN = build_pair_factorization(*tf.MNtab, embed_into(M, tf.MN, *tf.MNtab),
                                         embed_into(N, tf.MN, *tf.MNtab));
    tf.pairMP = build_pair_factorization(*tf.MPtab, embed_into(M, tf.MP, *tf.MPtab),
                                         embed_into(P, tf.MP, *tf.MPtab));
    tf.pairNP = build_pair_factorization(*tf.NPtab, embed_into(N, tf.NP, *tf.NPtab),
                                         embed_into(P, tf.NP, *tf.NPtab));
    tf.pairM_NP = build_pair_factorization(G, M, tf.NP);
    tf.pairMN_P = build_pair_factorization(G, tf.MN, P);
  }
  return tf;
}

std::vector<std::array<SubgroupRef, 3>> enumerate_exact_triples(
    const GroupTable& G, const std::vector<SubgroupRef>& subgroups, TripleMode mode,
    bool include_degenerate) {
  std::vector<std::array<SubgroupRef, 3>> triples;
  for (const auto& M : subgroups)
    for (const auto& N : subgroups) {
      if (static_cast<std::int64_t>(M.size()) * N.size() > G.order()) continue;
      for (const auto& P : subgroups) {
        if (!include_degenerate && (M.size() == 1 || N.size() == 1 || P.size() == 1)) continue;
        if (static_cast<std::int64_t>(M.size()) * N.size() * P.size() != G.order()) continue;
        if (is_exact_triple(G, M, N, P, mode)) triples.push_back({M, N, P});
      }
    }
  return triples;
}

}  // namespace mgt
