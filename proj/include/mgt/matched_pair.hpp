#pragma once

#include <cstdint>
#include <vector>

#include "mgt/factorization.hpp"
#include "mgt/group.hpp"
#include "mgt/report.hpp"

namespace mgt {

// Options shared by all verification sweeps.
struct VerifyOptions {
  int counterexample_cap = 10;
  kernels::ExecMode exec = kernels::ExecMode::Auto;
};

// The two-action data of a matched pair: ^m n (left action of M on N) and
// m^n (right action of N on M), both stored as dense position tables over
// the standalone factor tables.  Instances may be built directly for
// mutation testing; every verifier treats the tables as untrusted input.
struct MatchedPairData {
  GroupTable Mtab, Ntab;
  std::vector<std::int32_t> left_act;   // |M| x |N|, entry = N position of ^m n
  std::vector<std::int32_t> right_act;  // |M| x |N|, entry = M position of m^n
  const PairFactorization* origin = nullptr;

  std::int32_t msize() const { return Mtab.order(); }
  std::int32_t nsize() const { return Ntab.order(); }
  // ^m n
  std::int32_t left(std::int32_t m, std::int32_t n) const {
    return left_act[static_cast<std::size_t>(m) * nsize() + n];
  }
  // m^n
  std::int32_t right(std::int32_t m, std::int32_t n) const {
    return right_act[static_cast<std::size_t>(m) * nsize() + n];
  }
};

// Throws ArgumentError unless the action tables have the right shape and
// every entry is in range (the tables may still be wrong).
void validate_shape(const MatchedPairData& mp);

// Reads both actions off the factorization: for each (m, n) the ambient
// product m*n is re-decomposed as n'*m', giving ^m n = n' and m^n = m'.
MatchedPairData derive_matched_pair(const PairFactorization& pf);

// Exhaustive checks of the displayed composition rules and the unit laws:
//   m^(np) = (m^n)^p          ["right_action_product"]
//   ^m(np) = ^mn * ^(m^n)p    ["left_action_product"]
//   ^(lm)n = ^l(^mn)          ["left_action_composition"]
//   (lm)^n = (l^(^mn)) * m^n  ["right_action_composition"]
//   ^1 n = n, m^1 = m, ^m 1 = 1, 1^n = 1   ["unit_laws"]
VerificationReport verify_pair_axioms(const MatchedPairData& mp, const VerifyOptions& opt = {});

// Exhaustive checks of the two inversion identities:
//   (^mn)^-1 = ^(m^n)(n^-1)   ["inverse_left_action"]
//   (m^n)^-1 = (m^-1)^(^mn)   ["inverse_right_action"]
VerificationReport verify_inverse_identities(const MatchedPairData& mp,
                                             const VerifyOptions& opt = {});

// The pairings of the reversed product nm = (m NE n)(m NW n):
//   m NE n = m^(^(m~)(n~))  in M      (m~, n~ are the group inverses)
//   m NW n = ^((m~)^(n~))n  in N
std::int32_t pairing_ne(const MatchedPairData& mp, std::int32_t m, std::int32_t n);
std::int32_t pairing_nw(const MatchedPairData& mp, std::int32_t m, std::int32_t n);

// One cell of the bicrossproduct multiplication
//   (m,n)(l,p) = (m * (l NE n), (l NW n) * p).
struct BicrossCell {
  std::int32_t m = 0, n = 0;
};
BicrossCell bicross_multiply(const MatchedPairData& mp, std::int32_t m, std::int32_t n,
                             std::int32_t l, std::int32_t p);

// The bicrossproduct group on the index set M x N, pair (m, n) at index
// m*|N| + n.  Construction validates the group axioms exhaustively and
// throws NotAGroupError with a witness when they fail (possible only for
// hand-built action tables, never for derived ones).
GroupTable bicrossproduct(const MatchedPairData& mp);

// Checks that phi(m, n) = m*n is a bijection M x N -> G and a homomorphism
// from bicrossproduct multiplication to G, and that the reversed product
// identity nm = (m NE n)(m NW n) holds in G.  Check ids:
// "canonical_map_bijective", "canonical_map_homomorphism",
// "reversed_product".
VerificationReport verify_canonical_map(const MatchedPairData& mp, const PairFactorization& pf,
                                        const VerifyOptions& opt = {});

}  // namespace mgt
