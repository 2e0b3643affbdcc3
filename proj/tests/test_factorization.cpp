#include <doctest.h>

#include "mgt/error.hpp"
#include "mgt/factorization.hpp"
#include "mgt/group_spec.hpp"
#include "test_helpers.hpp"

using namespace mgt;
using mgt_test::elem;
using mgt_test::sub;

TEST_CASE("exact pair recognition") {
  const GroupTable S3 = symmetric_group(3);
  const SubgroupRef M = sub(S3, {"(1 2 3)"});
  const SubgroupRef N = sub(S3, {"(1 2)"});
  CHECK(is_exact_pair(S3, M, N));
  CHECK_FALSE(is_exact_pair(S3, M, M));

  const GroupTable Z6 = cyclic_group(6);
  const SubgroupRef full = subgroup_generated(Z6, {1});
  CHECK(is_exact_pair(Z6, trivial_subgroup(Z6), full));

  SubgroupRef not_closed{&S3, {0, 2, 3}};
  CHECK_THROWS_AS(is_exact_pair(S3, not_closed, N), ArgumentError);
  const GroupTable Z4 = cyclic_group(4);
  SubgroupRef foreign = sub(S3, {"(1 2)"});
  CHECK_THROWS_AS(is_exact_pair(Z4, foreign, foreign), ArgumentError);
}

TEST_CASE("pair decomposition tables in S3") {
  const GroupTable S3 = symmetric_group(3);
  const SubgroupRef M = sub(S3, {"(1 2 3)"});  // {(), (1 2 3), (1 3 2)}
  const SubgroupRef N = sub(S3, {"(1 2)"});    // {(), (1 2)}
  const PairFactorization pf = build_pair_factorization(S3, M, N);

  // (1 3) = (1 3 2)*(1 2) under the apply-first convention.
  const Elem g = elem(S3, "(1 3)");
  CHECK(M.elements[pf.decomp[g].m] == elem(S3, "(1 3 2)"));
  CHECK(N.elements[pf.decomp[g].n] == elem(S3, "(1 2)"));
  // (1 3) = (1 2)*(1 2 3) in the reversed order.
  CHECK(N.elements[pf.decomp_rev[g].n] == elem(S3, "(1 2)"));
  CHECK(M.elements[pf.decomp_rev[g].m] == elem(S3, "(1 2 3)"));
  CHECK(pf.decomp[0].m == 0);
  CHECK(pf.decomp[0].n == 0);

  // Both tables decompose every element exactly, checked against the
  // independent permutation oracle.
  for (Elem x = 0; x < S3.order(); ++x) {
    const Perm via_mn =
        S3.label(M.elements[pf.decomp[x].m]).compose(S3.label(N.elements[pf.decomp[x].n]));
    CHECK(via_mn == S3.label(x));
    const Perm via_nm = S3.label(N.elements[pf.decomp_rev[x].n])
                            .compose(S3.label(M.elements[pf.decomp_rev[x].m]));
    CHECK(via_nm == S3.label(x));
  }

  CHECK_THROWS_AS(build_pair_factorization(S3, M, M), NotExactError);
}

TEST_CASE("decomposition is a bijection onto the factor index sets") {
  const GroupTable G = build_group(parse_group_spec("product:cyclic:2,cyclic:6"));
  const auto pairs = enumerate_exact_pairs(G);
  REQUIRE_FALSE(pairs.empty());
  for (const auto& [M, N] : pairs) {
    const PairFactorization pf = build_pair_factorization(G, M, N);
    std::vector<char> seen(static_cast<size_t>(M.size()) * N.size(), 0);
    std::vector<char> seen_rev(seen.size(), 0);
    for (Elem g = 0; g < G.order(); ++g) {
      seen[static_cast<size_t>(pf.decomp[g].m) * N.size() + pf.decomp[g].n] = 1;
      seen_rev[static_cast<size_t>(pf.decomp_rev[g].m) * N.size() + pf.decomp_rev[g].n] = 1;
    }
    for (char c : seen) CHECK(c == 1);
    for (char c : seen_rev) CHECK(c == 1);
  }
}

TEST_CASE("subgroup enumeration counts") {
  CHECK(enumerate_subgroups(cyclic_group(6)).size() == 4);
  CHECK(enumerate_subgroups(cyclic_group(1)).size() == 1);

  const auto s3_subs = enumerate_subgroups(symmetric_group(3));
  REQUIRE(s3_subs.size() == 6);
  std::vector<int> sizes;
  for (const auto& s : s3_subs) sizes.push_back(s.size());
  CHECK(sizes == std::vector<int>{1, 2, 2, 2, 3, 6});

  // S4 has 30 subgroups; all are 2-generated, so the default bound finds
  // every one of them.
  CHECK(enumerate_subgroups(symmetric_group(4)).size() == 30);

  // (Z2)^4 itself is 4-generated; the enumeration still lists the whole
  // group as a subgroup.
  const GroupTable V16 = build_group(parse_group_spec("product:klein4,klein4"));
  const auto v16_subs = enumerate_subgroups(V16);
  CHECK(v16_subs.back().size() == 16);
}

TEST_CASE("exact pair enumeration") {
  const GroupTable S3 = symmetric_group(3);
  const auto pairs = enumerate_exact_pairs(S3);
  // (Z3, each of three Z2s) and the three reverses.
  CHECK(pairs.size() == 6);
  bool found_12 = false, found_13 = false;
  const SubgroupRef M = sub(S3, {"(1 2 3)"});
  for (const auto& [A, B] : pairs) {
    if (A.elements == M.elements && B.elements == sub(S3, {"(1 2)"}).elements) found_12 = true;
    if (A.elements == M.elements && B.elements == sub(S3, {"(1 3)"}).elements) found_13 = true;
  }
  CHECK(found_12);
  CHECK(found_13);

  // Symmetry: (M, N) present iff (N, M) present.
  for (const auto& [A, B] : pairs) {
    bool reverse_present = false;
    for (const auto& [C, D] : pairs)
      if (C.elements == B.elements && D.elements == A.elements) reverse_present = true;
    CHECK(reverse_present);
  }

  // Z4's only proper subgroups are nested, so no nondegenerate pair.
  CHECK(enumerate_exact_pairs(cyclic_group(4)).empty());
  // Z6 = Z2 * Z3 in both orders.
  CHECK(enumerate_exact_pairs(cyclic_group(6)).size() == 2);
  // Every subgroup of the quaternion group contains -1.
  CHECK(enumerate_exact_pairs(quaternion8_group()).empty());
  // Degenerate factorizations appear only on request.
  CHECK(enumerate_exact_pairs(cyclic_group(4), true).size() == 2);  // ({0},Z4), (Z4,{0})
}

TEST_CASE("exact triples in S4") {
  const GroupTable S4 = symmetric_group(4);
  const SubgroupRef V4 = sub(S4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  const SubgroupRef N = sub(S4, {"(1 2 3)"});
  const SubgroupRef P = sub(S4, {"(1 2)"});
  CHECK(is_exact_triple(S4, V4, N, P));
  CHECK_FALSE(is_exact_triple(S4, V4, V4, N));  // 4*4*3 != 24

  const TripleFactorization tf = build_triple_factorization(S4, V4, N, P);
  CHECK(tf.products_closed);
  // MN = A4, NP = S{1,2,3}, MP = a dihedral group of order 8.
  CHECK(tf.MN.elements == sub(S4, {"(1 2 3)", "(1 2)(3 4)"}).elements);
  CHECK(tf.MN.size() == 12);
  CHECK(tf.NP.size() == 6);
  CHECK(tf.NP.elements == sub(S4, {"(1 2 3)", "(1 2)"}).elements);
  CHECK(tf.MP.size() == 8);

  // decomp3 spot checks.
  const TripleParts id = tf.decomp3[0];
  CHECK((id.m == 0 && id.n == 0 && id.p == 0));
  const TripleParts swap = tf.decomp3[elem(S4, "(1 2)")];
  CHECK((swap.m == 0 && swap.n == 0));
  CHECK(tf.P.elements[swap.p] == elem(S4, "(1 2)"));
  const TripleParts dbl = tf.decomp3[elem(S4, "(1 2)(3 4)")];
  CHECK(tf.M.elements[dbl.m] == elem(S4, "(1 2)(3 4)"));
  CHECK((dbl.n == 0 && dbl.p == 0));

  // Restricting the triple decomposition to MN agrees with the pair
  // decomposition (p = identity).
  const PairFactorization pair_mn = build_pair_factorization(*tf.MNtab, tf.pairMN.M, tf.pairMN.N);
  for (std::int32_t pos = 0; pos < tf.MN.size(); ++pos) {
    const Elem g = tf.MN.elements[pos];
    CHECK(tf.decomp3[g].p == 0);
    CHECK(tf.decomp3[g].m == pair_mn.decomp[pos].m);
    CHECK(tf.decomp3[g].n == pair_mn.decomp[pos].n);
  }
}

TEST_CASE("direct product triple is exact") {
  const GroupTable G = build_group(parse_group_spec("product:cyclic:2,product:cyclic:3,cyclic:5"));
  REQUIRE(G.order() == 30);
  const SubgroupRef M = sub(G, {"(1 2)"});
  const SubgroupRef N = sub(G, {"(3 4 5)"});
  const SubgroupRef P = sub(G, {"(6 7 8 9 10)"});
  CHECK(is_exact_triple(G, M, N, P));
  const TripleFactorization tf = build_triple_factorization(G, M, N, P);
  CHECK(tf.products_closed);
  CHECK(tf.NP.size() == 15);
}

TEST_CASE("relaxed-only triple: bijective but NP not closed") {
  const GroupTable S4 = symmetric_group(4);
  const SubgroupRef M = sub(S4, {"(1 2)"});
  const SubgroupRef N = sub(S4, {"(1 2 3)"});
  const SubgroupRef P = sub(S4, {"(1 3 2 4)"});
  REQUIRE(P.size() == 4);
  CHECK(is_exact_triple(S4, M, N, P, TripleMode::Relaxed));
  CHECK_FALSE(is_exact_triple(S4, M, N, P, TripleMode::Strict));
  CHECK_THROWS_AS(build_triple_factorization(S4, M, N, P, TripleMode::Strict), NotExactError);
  const TripleFactorization tf = build_triple_factorization(S4, M, N, P, TripleMode::Relaxed);
  CHECK_FALSE(tf.products_closed);
  // The relaxed decomposition is still a bijection.
  for (Elem g = 0; g < 24; ++g) CHECK(tf.decomp3[g].m >= 0);
}

TEST_CASE("triple enumeration finds the S4 strict triple") {
  const GroupTable S4 = symmetric_group(4);
  const auto subs = enumerate_subgroups(S4);
  const auto triples = enumerate_exact_triples(S4, subs, TripleMode::Strict);
  REQUIRE_FALSE(triples.empty());
  const SubgroupRef V4 = sub(S4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  bool found = false;
  for (const auto& t : triples) {
    if (t[0].elements == V4.elements && t[1].size() == 3 && t[2].size() == 2) found = true;
    CHECK(t[0].size() * t[1].size() * t[2].size() == 24);
  }
  CHECK(found);
}
