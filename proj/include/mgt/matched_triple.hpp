#pragma once

#include <compare>
#include <cstdint>

#include "mgt/double_groupoid.hpp"
#include "mgt/matched_pair.hpp"

namespace mgt {

// Positions into the three standalone factor tables.
struct TripleElement {
  std::int32_t m = 0, n = 0, p = 0;
  auto operator<=>(const TripleElement&) const = default;
};

// The six-action data of a matched triple: one matched pair for each
// ordered factor pair, derived inside the product subgroups MN, MP, NP.
// All position spaces are shared: index k of Mtab names the same ambient
// element in pairMN and in pairMP.
struct MatchedTripleData {
  GroupTable Mtab, Ntab, Ptab;
  MatchedPairData pairMN;  // M acts left on N, N acts right on M
  MatchedPairData pairMP;  // M acts left on P, P acts right on M
  MatchedPairData pairNP;  // N acts left on P, P acts right on N
  const TripleFactorization* origin = nullptr;

  std::int32_t msize() const { return Mtab.order(); }
  std::int32_t nsize() const { return Ntab.order(); }
  std::int32_t psize() const { return Ptab.order(); }
  std::int64_t combined_order() const {
    return static_cast<std::int64_t>(msize()) * nsize() * psize();
  }
};

// Derives the three matched pairs from the pair subfactorizations.  Throws
// NotExactError when the factorization lacks subgroup products (relaxed
// mode input whose product sets are not closed).
MatchedTripleData derive_matched_triple(const TripleFactorization& tf);

// Exhaustive check of the three cube-face identities over M x N x P:
//   A:  m^(np)         = (m^(^n p))^(n^p)
//   B:  ^(m^(^n p))(n^p) = (^m n)^(^(m^n) p)
//   C:  ^(mn)p         = ^(^m n)(^(m^n) p)
// Every action on the right-hand sides is read from the unique
// type-correct pair table; the product actions m^(np) and ^(mn)p on the
// left are evaluated in the ambient group through the exact pairs
// (M, NP) and (MN, P).  Check ids: "cube_identity_a" / "_b" / "_c".
VerificationReport verify_cube_identities(const MatchedTripleData& mt,
                                          const VerifyOptions& opt = {});

// The proposed group composition on M x N x P (corrected variant):
//   (m,n,p)(mu,nu,pi) =
//     ( m*((mu NE p) NE n),
//       ((mu NE p) NW n) * (nu NE (mu NW p)),
//       (nu NW (mu NW p)) * pi )
// with pairings resolved to the type-forcing pair: mu NE p, mu NW p from
// pairMP; (mu NE p) NE n, (mu NE p) NW n from pairMN; nu NE (mu NW p),
// nu NW (mu NW p) from pairNP.
TripleElement triple_compose_paper(const MatchedTripleData& mt, TripleElement t1,
                                   TripleElement t2);

// The displayed third slot multiplies the N element nu NE (mu NW p) by the
// P element pi, which only type-checks when the N and P carriers are the
// same subgroup.  True in that case.
bool literal_third_slot_typed(const MatchedTripleData& mt);

// The literal-variant composition; only callable when
// literal_third_slot_typed(mt).  Throws ArgumentError otherwise.
TripleElement triple_compose_paper_literal(const MatchedTripleData& mt, TripleElement t1,
                                           TripleElement t2);

// Ground truth: embeds both triples into G, multiplies there, and
// re-factorizes the product.
TripleElement triple_compose_oracle(const TripleFactorization& tf, TripleElement t1,
                                    TripleElement t2);

// Builds the full composition tables from triple_compose_paper (corrected
// variant) and triple_compose_oracle and decides, exhaustively:
//   - group axioms of the formula table ("formula_identity",
//     "formula_inverses", "formula_latin_square", "formula_associativity")
//   - group axioms of the oracle table (harness sanity; same ids with
//     prefix "oracle_")
//   - cell-by-cell equality formula vs oracle ("formula_vs_oracle")
//   - the literal variant's verdict or type status ("literal_third_slot",
//     skipped when ill-typed)
//   - the canonical map (m,n,p) -> mnp being an isomorphism onto G
//     ("triple_canonical_bijective", "triple_canonical_homomorphism").
VerificationReport verify_triple_group(const MatchedTripleData& mt, const VerifyOptions& opt = {});

}  // namespace mgt
