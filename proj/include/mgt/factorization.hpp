#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "mgt/group.hpp"

namespace mgt {

// Positions into the factor element lists, not ambient indices.
struct MNParts {
  std::int32_t m = 0, n = 0;  // g = M.elements[m] * N.elements[n]
};
struct NMParts {
  std::int32_t n = 0, m = 0;  // g = N.elements[n] * M.elements[m]
};

// An exact factorization G = MN with both decomposition tables: every
// ambient element g written uniquely as m*n and as n'*m'.
struct PairFactorization {
  const GroupTable* G = nullptr;
  SubgroupRef M, N;
  std::vector<MNParts> decomp;      // indexed by ambient element
  std::vector<NMParts> decomp_rev;  // indexed by ambient element
};

// True iff M and N exactly factorize G: trivial intersection and
// |M|*|N| = |G| (which together force MN = G with unique decomposition).
// Throws ArgumentError when M or N is not a subgroup of G.
bool is_exact_pair(const GroupTable& G, const SubgroupRef& M, const SubgroupRef& N);

// Builds both decomposition tables; throws NotExactError when the pair is
// not exact.  Uniqueness is verified by counting (each g hit exactly once).
PairFactorization build_pair_factorization(const GroupTable& G, const SubgroupRef& M,
                                           const SubgroupRef& N);

// All distinct subgroups of G obtained as closures of generator subsets of
// size <= gen_bound, plus G itself, deduplicated by element set and sorted
// by (size, element list).  Complete whenever every subgroup of G can be
// generated by gen_bound elements; gen_bound 3 covers all groups of order
// <= 48 except for elementary-abelian 2-subgroups of rank 4 inside
// direct products of order >= 32.
std::vector<SubgroupRef> enumerate_subgroups(const GroupTable& G, int gen_bound = 3);

// All ordered pairs from `subgroups` that pass is_exact_pair.  Degenerate
// pairs (a trivial factor) are excluded unless requested.
std::vector<std::pair<SubgroupRef, SubgroupRef>> enumerate_exact_pairs(
    const GroupTable& G, const std::vector<SubgroupRef>& subgroups,
    bool include_degenerate = false);
std::vector<std::pair<SubgroupRef, SubgroupRef>> enumerate_exact_pairs(
    const GroupTable& G, bool include_degenerate = false, int gen_bound = 3);

enum class TripleMode { Strict, Relaxed };

// True iff |M||N||P| = |G| and (m,n,p) -> m*n*p is injective (hence a
// bijection onto G).  Strict mode additionally requires the product sets
// MN, MP, NP to be subgroups of G, each then exactly factorized by its
// pair.  Throws ArgumentError on non-subgroup input.
bool is_exact_triple(const GroupTable& G, const SubgroupRef& M, const SubgroupRef& N,
                     const SubgroupRef& P, TripleMode mode = TripleMode::Strict);

struct TripleParts {
  std::int32_t m = 0, n = 0, p = 0;  // g = M.elements[m] * N.elements[n] * P.elements[p]
};

// An exact triple factorization G = MNP.  In strict mode (and in relaxed
// mode when the products happen to be closed) the three pairwise
// factorizations are materialized inside the product subgroups, along with
// the two ambient factorizations G = M*(NP) and G = (MN)*P used to evaluate
// actions of products.
struct TripleFactorization {
  const GroupTable* G = nullptr;
  SubgroupRef M, N, P;
  TripleMode mode = TripleMode::Strict;
  std::vector<TripleParts> decomp3;  // indexed by ambient element

  // Set when MN, MP and NP are subgroups of G.
  bool products_closed = false;
  SubgroupRef MN, MP, NP;
  std::unique_ptr<GroupTable> MNtab, MPtab, NPtab;
  PairFactorization pairMN;  // (M, N) inside *MNtab
  PairFactorization pairMP;  // (M, P) inside *MPtab
  PairFactorization pairNP;  // (N, P) inside *NPtab
  PairFactorization pairM_NP;  // (M, NP) inside G
  PairFactorization pairMN_P;  // (MN, P) inside G
};

// Builds the triple factorization; throws NotExactError when the
// precondition fails for the requested mode.
TripleFactorization build_triple_factorization(const GroupTable& G, const SubgroupRef& M,
                                               const SubgroupRef& N, const SubgroupRef& P,
                                               TripleMode mode = TripleMode::Strict);

// All ordered subgroup triples passing is_exact_triple in the given mode.
std::vector<std::array<SubgroupRef, 3>> enumerate_exact_triples(
    const GroupTable& G, const std::vector<SubgroupRef>& subgroups, TripleMode mode,
    bool include_degenerate = false);

}  // namespace mgt
