#include "mgt/matched_triple.hpp"

#include <algorithm>
#include <functional>

#include "check_runner.hpp"
#include "mgt/error.hpp"

namespace mgt {

namespace {

void require_aligned(const GroupTable& a, const GroupTable& b, const char* what) {
  const auto fa = a.flat();
  const auto fb = b.flat();
  if (fa.size() != fb.size() || !std::equal(fa.begin(), fa.end(), fb.begin()))
    throw Error(std::string("internal: factor tables disagree between pairs (") + what + ")");
}

}  // namespace

MatchedTripleData derive_matched_triple(const TripleFactorization& tf) {
  if (!tf.products_closed)
    throw NotExactError(
        "matched-triple derivation needs MN, MP and NP to be subgroups; "
        "this relaxed-mode factorization has a non-closed product set");
  MatchedTripleData mt;
  mt.Mtab = subgroup_table(tf.M);
  mt.Ntab = subgroup_table(tf.N);
  mt.Ptab = subgroup_table(tf.P);
  mt.pairMN = derive_matched_pair(tf.pairMN);
  mt.pairMP = derive_matched_pair(tf.pairMP);
  mt.pairNP = derive_matched_pair(tf.pairNP);
  mt.origin = &tf;
  // Monotone re-indexing keeps every factor's position space identical
  // across the pairs it appears in.
  require_aligned(mt.pairMN.Mtab, mt.Mtab, "M in MN");
  require_aligned(mt.pairMP.Mtab, mt.Mtab, "M in MP");
  require_aligned(mt.pairMN.Ntab, mt.Ntab, "N in MN");
  require_aligned(mt.pairNP.Mtab, mt.Ntab, "N in NP");
  require_aligned(mt.pairMP.Ntab, mt.Ptab, "P in MP");
  require_aligned(mt.pairNP.Ntab, mt.Ptab, "P in NP");
  return mt;
}

VerificationReport verify_cube_identities(const MatchedTripleData& mt, const VerifyOptions& opt) {
  if (!mt.origin) throw ArgumentError("cube identities need the originating factorization");
  const TripleFactorization& tf = *mt.origin;
  const GroupTable& G = *tf.G;
  const std::int32_t ms = mt.msize(), ns = mt.nsize(), ps = mt.psize();
  const std::int64_t total = static_cast<std::int64_t>(ms) * ns * ps;
  auto decode = [ns, ps](std::int64_t i) {
    return std::array<std::int32_t, 3>{
        static_cast<std::int32_t>(i / (static_cast<std::int64_t>(ns) * ps)),
        static_cast<std::int32_t>((i / ps) % ns), static_cast<std::int32_t>(i % ps)};
  };
  // g = m*n*p in G; the two ambient pairs decompose it as (^m(np))(m^(np))
  // and (^(mn)p)((mn)^p).
  auto ambient = [&](std::int32_t m, std::int32_t n, std::int32_t p) {
    return G.at(G.at(tf.M.elements[m], tf.N.elements[n]), tf.P.elements[p]);
  };
  auto witness_inputs = [&](std::int64_t i) {
    const auto [m, n, p] = decode(i);
    return std::vector<std::pair<std::string, std::string>>{
        {"m", mt.Mtab.render(m)}, {"n", mt.Ntab.render(n)}, {"p", mt.Ptab.render(p)}};
  };

  VerificationReport report;
  report.subject = "cube identities";
  report.group_order = G.order();

  // A: m^(np) = (m^(^n p))^(n^p), both sides in M.
  report.add(detail::run_check(
      "cube_identity_a", total,
      [&](std::int64_t i) {
        const auto [m, n, p] = decode(i);
        const std::int32_t lhs = tf.pairM_NP.decomp_rev[ambient(m, n, p)].m;
        const std::int32_t rhs =
            mt.pairMN.right(mt.pairMP.right(m, mt.pairNP.left(n, p)), mt.pairNP.right(n, p));
        return lhs != rhs;
      },
      [&](std::int64_t i) {
        const auto [m, n, p] = decode(i);
        return Witness{
            witness_inputs(i), mt.Mtab.render(tf.pairM_NP.decomp_rev[ambient(m, n, p)].m),
            mt.Mtab.render(mt.pairMN.right(mt.pairMP.right(m, mt.pairNP.left(n, p)),
                                           mt.pairNP.right(n, p)))};
      },
      opt.counterexample_cap, opt.exec));

  // B: ^(m^(^n p))(n^p) = (^m n)^(^(m^n) p), both sides in N.
  report.add(detail::run_check(
      "cube_identity_b", total,
      [&](std::int64_t i) {
        const auto [m, n, p] = decode(i);
        const std::int32_t lhs =
            mt.pairMN.left(mt.pairMP.right(m, mt.pairNP.left(n, p)), mt.pairNP.right(n, p));
        const std::int32_t rhs =
            mt.pairNP.right(mt.pairMN.left(m, n), mt.pairMP.left(mt.pairMN.right(m, n), p));
        return lhs != rhs;
      },
      [&](std::int64_t i) {
        const auto [m, n, p] = decode(i);
        return Witness{
            witness_inputs(i),
            mt.Ntab.render(mt.pairMN.left(mt.pairMP.right(m, mt.pairNP.left(n, p)),
                                          mt.pairNP.right(n, p))),
            mt.Ntab.render(mt.pairNP.right(mt.pairMN.left(m, n),
                                           mt.pairMP.left(mt.pairMN.right(m, n), p)))};
      },
      opt.counterexample_cap, opt.exec));

  // C: ^(mn)p = ^(^m n)(^(m^n) p), both sides in P.
  report.add(detail::run_check(
      "cube_identity_c", total,
      [&](std::int64_t i) {
        const auto [m, n, p] = decode(i);
        const std::int32_t lhs = tf.pairMN_P.decomp_rev[ambient(m, n, p)].n;
        const std::int32_t rhs =
            mt.pairNP.left(mt.pairMN.left(m, n), mt.pairMP.left(mt.pairMN.right(m, n), p));
        return lhs != rhs;
      },
      [&](std::int64_t i) {
        const auto [m, n, p] = decode(i);
        return Witness{
            witness_inputs(i), mt.Ptab.render(tf.pairMN_P.decomp_rev[ambient(m, n, p)].n),
            mt.Ptab.render(mt.pairNP.left(mt.pairMN.left(m, n),
                                          mt.pairMP.left(mt.pairMN.right(m, n), p)))};
      },
      opt.counterexample_cap, opt.exec));

  return report;
}

TripleElement triple_compose_paper(const MatchedTripleData& mt, TripleElement t1,
                                   TripleElement t2) {
  const std::int32_t mu_ne_p = pairing_ne(mt.pairMP, t2.m, t1.p);  // in M
  const std::int32_t mu_nw_p = pairing_nw(mt.pairMP, t2.m, t1.p);  // in P
  const std::int32_t a = pairing_ne(mt.pairMN, mu_ne_p, t1.n);     // in M
  const std::int32_t b = pairing_nw(mt.pairMN, mu_ne_p, t1.n);     // in N
  const std::int32_t c = pairing_ne(mt.pairNP, t2.n, mu_nw_p);     // in N
  const std::int32_t d = pairing_nw(mt.pairNP, t2.n, mu_nw_p);     // in P
  return TripleElement{mt.Mtab.at(t1.m, a), mt.Ntab.at(b, c), mt.Ptab.at(d, t2.p)};
}

bool literal_third_slot_typed(const MatchedTripleData& mt) {
  return mt.origin && mt.origin->N.elements == mt.origin->P.elements;
}

TripleElement triple_compose_paper_literal(const MatchedTripleData& mt, TripleElement t1,
                                           TripleElement t2) {
  if (!literal_third_slot_typed(mt))
    throw ArgumentError(
        "literal third slot multiplies an N element by a P element; "
        "undefined unless the N and P carriers coincide");
  const std::int32_t mu_ne_p = pairing_ne(mt.pairMP, t2.m, t1.p);
  const std::int32_t mu_nw_p = pairing_nw(mt.pairMP, t2.m, t1.p);
  const std::int32_t a = pairing_ne(mt.pairMN, mu_ne_p, t1.n);
  const std::int32_t b = pairing_nw(mt.pairMN, mu_ne_p, t1.n);
  const std::int32_t c = pairing_ne(mt.pairNP, t2.n, mu_nw_p);  // N position = P position here
  return TripleElement{mt.Mtab.at(t1.m, a), mt.Ntab.at(b, c), mt.Ptab.at(c, t2.p)};
}

TripleElement triple_compose_oracle(const TripleFactorization& tf, TripleElement t1,
                                    TripleElement t2) {
  const GroupTable& G = *tf.G;
  auto embed = [&](TripleElement t) {
    return G.at(G.at(tf.M.elements[t.m], tf.N.elements[t.n]), tf.P.elements[t.p]);
  };
  const TripleParts parts = tf.decomp3[G.at(embed(t1), embed(t2))];
  return TripleElement{parts.m, parts.n, parts.p};
}

namespace {

// Group-axiom checks over a flat composition table, reported rather than
// thrown (the formula table is under test, not trusted).
void add_group_axiom_checks(VerificationReport& report, const std::string& prefix,
                            const std::vector<std::int32_t>& table, std::int32_t order,
                            const std::function<std::string(std::int32_t)>& render,
                            const VerifyOptions& opt) {
  const std::int64_t n = order;
  auto at = [&](std::int64_t a, std::int64_t b) { return table[a * n + b]; };

  report.add(detail::run_check(
      prefix + "_identity", 2 * n,
      [&](std::int64_t i) {
        const std::int64_t a = i / 2;
        return (i % 2 == 0) ? at(0, a) != a : at(a, 0) != a;
      },
      [&](std::int64_t i) {
        const std::int64_t a = i / 2;
        return (i % 2 == 0)
                   ? Witness{{{"a", render(static_cast<std::int32_t>(a))}},
                             "1*a=" + render(at(0, a)), render(static_cast<std::int32_t>(a))}
                   : Witness{{{"a", render(static_cast<std::int32_t>(a))}},
                             "a*1=" + render(at(a, 0)), render(static_cast<std::int32_t>(a))};
      },
      opt.counterexample_cap, opt.exec));

  // Rows and columns are permutations of the index set.
  report.add(detail::run_check(
      prefix + "_latin_square", 2 * n,
      [&](std::int64_t i) {
        const std::int64_t a = i / 2;
        std::vector<char> seen(order, 0);
        for (std::int64_t b = 0; b < n; ++b) {
          const std::int32_t v = (i % 2 == 0) ? at(a, b) : at(b, a);
          if (v < 0 || v >= order || seen[v]) return true;
          seen[v] = 1;
        }
        return false;
      },
      [&](std::int64_t i) {
        const std::int64_t a = i / 2;
        return Witness{{{"index", render(static_cast<std::int32_t>(a))}},
                       (i % 2 == 0) ? "row is not a permutation" : "column is not a permutation",
                       ""};
      },
      opt.counterexample_cap, opt.exec));

  report.add(detail::run_check(
      prefix + "_inverses", n,
      [&](std::int64_t a) {
        for (std::int64_t b = 0; b < n; ++b)
          if (at(a, b) == 0 && at(b, a) == 0) return false;
        return true;
      },
      [&](std::int64_t a) {
        return Witness{{{"a", render(static_cast<std::int32_t>(a))}}, "no two-sided inverse", ""};
      },
      opt.counterexample_cap, opt.exec));

  report.add(detail::run_check(
      prefix + "_associativity", n * n * n,
      [&](std::int64_t i) {
        const auto [a, b, c] = kernels::decode3(i, order);
        return at(at(a, b), c) != at(a, at(b, c));
      },
      [&](std::int64_t i) {
        const auto [a, b, c] = kernels::decode3(i, order);
        return Witness{{{"a", render(a)}, {"b", render(b)}, {"c", render(c)}},
                       render(at(at(a, b), c)), render(at(a, at(b, c)))};
      },
      opt.counterexample_cap, opt.exec));
}

}  // namespace

VerificationReport verify_triple_group(const MatchedTripleData& mt, const VerifyOptions& opt) {
  if (!mt.origin) throw ArgumentError("verify_triple_group needs the originating factorization");
  const TripleFactorization& tf = *mt.origin;
  const GroupTable& G = *tf.G;
  const std::int32_t ns = mt.nsize(), ps = mt.psize();
  const std::int32_t order = static_cast<std::int32_t>(mt.combined_order());

  auto to_linear = [ns, ps](TripleElement t) {
    return (static_cast<std::int64_t>(t.m) * ns + t.n) * ps + t.p;
  };
  auto from_linear = [ns, ps](std::int64_t i) {
    return TripleElement{static_cast<std::int32_t>(i / (static_cast<std::int64_t>(ns) * ps)),
                         static_cast<std::int32_t>((i / ps) % ns),
                         static_cast<std::int32_t>(i % ps)};
  };
  auto render = [&](std::int32_t i) {
    const TripleElement t = from_linear(i);
    return "(" + mt.Mtab.render(t.m) + ", " + mt.Ntab.render(t.n) + ", " + mt.Ptab.render(t.p) +
           ")";
  };
  auto embed = [&](TripleElement t) {
    return G.at(G.at(tf.M.elements[t.m], tf.N.elements[t.n]), tf.P.elements[t.p]);
  };

  std::vector<std::int32_t> formula(static_cast<std::size_t>(order) * order);
  std::vector<std::int32_t> oracle(static_cast<std::size_t>(order) * order);
  for (std::int32_t x = 0; x < order; ++x) {
    const TripleElement t1 = from_linear(x);
    for (std::int32_t y = 0; y < order; ++y) {
      const TripleElement t2 = from_linear(y);
      formula[static_cast<std::size_t>(x) * order + y] =
          static_cast<std::int32_t>(to_linear(triple_compose_paper(mt, t1, t2)));
      oracle[static_cast<std::size_t>(x) * order + y] =
          static_cast<std::int32_t>(to_linear(triple_compose_oracle(tf, t1, t2)));
    }
  }

  VerificationReport report;
  report.subject = "triple composition";
  report.group_order = G.order();

  // Harness sanity: the oracle transports G, so these must always pass.
  add_group_axiom_checks(report, "oracle", oracle, order, render, opt);
  // The open question: does the formula table satisfy the group axioms?
  add_group_axiom_checks(report, "formula", formula, order, render, opt);

  // Cell-by-cell comparison of the corrected formula against the oracle.
  report.add(detail::run_check(
      "formula_vs_oracle", static_cast<std::int64_t>(order) * order,
      [&](std::int64_t i) { return formula[i] != oracle[i]; },
      [&](std::int64_t i) {
        const auto [x, y] = kernels::decode2(i, order);
        return Witness{{{"t1", render(x)}, {"t2", render(y)}},
                       render(formula[i]), render(oracle[i])};
      },
      opt.counterexample_cap, opt.exec));

  // Literal third slot: evaluable only when the N and P carriers coincide.
  if (literal_third_slot_typed(mt)) {
    report.add(detail::run_check(
        "literal_third_slot", static_cast<std::int64_t>(order) * order,
        [&](std::int64_t i) {
          const auto [x, y] = kernels::decode2(i, order);
          return to_linear(triple_compose_paper_literal(mt, from_linear(x), from_linear(y))) !=
                 oracle[i];
        },
        [&](std::int64_t i) {
          const auto [x, y] = kernels::decode2(i, order);
          return Witness{
              {{"t1", render(x)}, {"t2", render(y)}},
              render(static_cast<std::int32_t>(to_linear(
                  triple_compose_paper_literal(mt, from_linear(x), from_linear(y))))),
              render(oracle[i])};
        },
        opt.counterexample_cap, opt.exec));
  } else {
    report.add(detail::skipped_check("literal_third_slot"));
  }

  // Canonical map (m,n,p) -> m*n*p: bijective onto G and a homomorphism
  // from the formula table to G.
  {
    CheckTimer timer;
    CheckResult check;
    check.id = "triple_canonical_bijective";
    check.instances = order;
    std::vector<std::int32_t> hit(G.order(), -1);
    for (std::int32_t x = 0; x < order; ++x) {
      const Elem g = embed(from_linear(x));
      if (hit[g] >= 0) {
        check.counterexamples.push_back(
            Witness{{{"t", render(x)}}, G.render(g), "already reached from " + render(hit[g])});
        if (static_cast<int>(check.counterexamples.size()) >= opt.counterexample_cap) break;
      } else {
        hit[g] = x;
      }
    }
    check.status = check.counterexamples.empty() ? CheckStatus::Pass : CheckStatus::Fail;
    check.ms = timer.elapsed_ms();
    report.add(std::move(check));
  }
  report.add(detail::run_check(
      "triple_canonical_homomorphism", static_cast<std::int64_t>(order) * order,
      [&](std::int64_t i) {
        const auto [x, y] = kernels::decode2(i, order);
        return embed(from_linear(formula[i])) != G.at(embed(from_linear(x)), embed(from_linear(y)));
      },
      [&](std::int64_t i) {
        const auto [x, y] = kernels::decode2(i, order);
        return Witness{{{"t1", render(x)}, {"t2", render(y)}},
                       G.render(embed(from_linear(formula[i]))),
                       G.render(G.at(embed(from_linear(x)), embed(from_linear(y))))};
      },
      opt.counterexample_cap, opt.exec));

  return report;
}

}  // namespace mgt
