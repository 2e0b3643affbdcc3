#include "mgt/survey.hpp"

#include <algorithm>
#include <sstream>

#include "check_runner.hpp"
#include "mgt/catalog.hpp"
#include "mgt/double_groupoid.hpp"
#include "mgt/error.hpp"
#include "mgt/matched_triple.hpp"

namespace mgt {

namespace {

std::string subgroup_str(const SubgroupRef& S) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < S.elements.size(); ++i) {
    if (i) out << ",";
    out << S.elements[i];
  }
  out << "}";
  return out.str();
}

bool actions_trivial(const MatchedPairData& mp) {
  for (std::int32_t m = 0; m < mp.msize(); ++m)
    for (std::int32_t n = 0; n < mp.nsize(); ++n)
      if (mp.left(m, n) != n || mp.right(m, n) != m) return false;
  return true;
}

// The check ids of a full pair report, in emission order; used to emit
// skipped placeholders when exactness already failed.
const char* const kPairCheckIds[] = {
    "unit_laws",           "right_action_product",  "left_action_product",
    "left_action_composition", "right_action_composition", "inverse_left_action",
    "inverse_right_action", "interchange_law",      "filler_bijection",
    "bicrossproduct_group", "canonical_map_bijective", "canonical_map_homomorphism",
    "reversed_product",     "derived_composition_agreement"};

const char* const kTripleCheckIds[] = {
    "subpair_mn_axioms",  "subpair_mp_axioms",  "subpair_np_axioms",
    "cube_identity_a",    "cube_identity_b",    "cube_identity_c",
    "oracle_identity",    "oracle_latin_square", "oracle_inverses",
    "oracle_associativity", "formula_identity",  "formula_latin_square",
    "formula_inverses",   "formula_associativity", "formula_vs_oracle",
    "literal_third_slot", "triple_canonical_bijective", "triple_canonical_homomorphism"};

CheckResult exactness_check(const char* id, bool exact, std::int64_t size_product,
                            std::int32_t group_order, int intersection_hint) {
  CheckTimer timer;
  CheckResult check;
  check.id = id;
  check.instances = 1;
  if (!exact) {
    Witness w;
    w.inputs = {{"factor_order_product", std::to_string(size_product)},
                {"group_order", std::to_string(group_order)}};
    w.lhs = "|factors| = " + std::to_string(size_product);
    w.rhs = intersection_hint > 1
                ? "intersection has " + std::to_string(intersection_hint) + " elements"
                : "|G| = " + std::to_string(group_order);
    check.counterexamples.push_back(std::move(w));
    check.status = CheckStatus::Fail;
  }
  check.ms = timer.elapsed_ms();
  return check;
}

int pair_intersection(const SubgroupRef& A, const SubgroupRef& B) {
  int count = 0;
  for (Elem a : A.elements)
    if (B.contains(a)) ++count;
  return count;
}

CheckResult filler_bijection_check(const MatchedPairData& mp, const VerifyOptions& opt) {
  const std::int32_t ms = mp.msize(), ns = mp.nsize();
  const std::int64_t total = 4 * static_cast<std::int64_t>(ms) * ns;
  auto query_for = [&](Square s, int kind) {
    switch (kind) {
      case 0: return EdgeQuery{EdgePair::LeftBottom, s.m, s.n};
      case 1: return EdgeQuery{EdgePair::LeftTop, s.m, top_edge(mp, s)};
      case 2: return EdgeQuery{EdgePair::BottomRight, s.n, right_edge(mp, s)};
      default: return EdgeQuery{EdgePair::TopRight, top_edge(mp, s), right_edge(mp, s)};
    }
  };
  static const char* kKindName[] = {"left+bottom", "left+top", "bottom+right", "top+right"};
  auto decode = [ns](std::int64_t i) {
    const int kind = static_cast<int>(i % 4);
    const std::int64_t cell = i / 4;
    return std::pair<Square, int>{
        Square{static_cast<std::int32_t>(cell / ns), static_cast<std::int32_t>(cell % ns)}, kind};
  };
  return detail::run_check(
      "filler_bijection", total,
      [&](std::int64_t i) {
        const auto [s, kind] = decode(i);
        try {
          return fill_square(mp, query_for(s, kind), /*checked=*/true) != s;
        } catch (const FillerError&) {
          return true;
        }
      },
      [&](std::int64_t i) {
        const auto [s, kind] = decode(i);
        Witness w;
        w.inputs = {{"square", "(" + mp.Mtab.render(s.m) + ", " + mp.Ntab.render(s.n) + ")"},
                    {"edges", kKindName[kind]}};
        try {
          const Square got = fill_square(mp, query_for(s, kind), true);
          w.lhs = "(" + mp.Mtab.render(got.m) + ", " + mp.Ntab.render(got.n) + ")";
        } catch (const FillerError& e) {
          w.lhs = e.what();
        }
        w.rhs = "(" + mp.Mtab.render(s.m) + ", " + mp.Ntab.render(s.n) + ")";
        return w;
      },
      opt.counterexample_cap, opt.exec);
}

CheckResult bicross_group_check(const MatchedPairData& mp) {
  CheckTimer timer;
  CheckResult check;
  check.id = "bicrossproduct_group";
  const std::int64_t order = static_cast<std::int64_t>(mp.msize()) * mp.nsize();
  check.instances = order * order * order;
  try {
    bicrossproduct(mp);
  } catch (const NotAGroupError& e) {
    check.counterexamples.push_back(Witness{{}, e.what(), "group axioms"});
    check.status = CheckStatus::Fail;
  }
  check.ms = timer.elapsed_ms();
  return check;
}

CheckResult derived_agreement_check(const MatchedPairData& mp, const VerifyOptions& opt) {
  const std::int32_t ns = mp.nsize();
  const std::int32_t cells = mp.msize() * ns;
  auto cell_str = [&](BicrossCell c) {
    return "(" + mp.Mtab.render(c.m) + ", " + mp.Ntab.render(c.n) + ")";
  };
  return detail::run_check(
      "derived_composition_agreement", static_cast<std::int64_t>(cells) * cells,
      [&](std::int64_t i) {
        const auto [x, y] = kernels::decode2(i, cells);
        const auto [m, n] = kernels::decode2(x, ns);
        const auto [l, p] = kernels::decode2(y, ns);
        try {
          const BicrossCell via_filler =
              derived_composition(mp, BicrossCell{m, n}, BicrossCell{l, p});
          const BicrossCell via_formula = bicross_multiply(mp, m, n, l, p);
          return via_filler.m != via_formula.m || via_filler.n != via_formula.n;
        } catch (const FillerError&) {
          return true;
        }
      },
      [&](std::int64_t i) {
        const auto [x, y] = kernels::decode2(i, cells);
        const auto [m, n] = kernels::decode2(x, ns);
        const auto [l, p] = kernels::decode2(y, ns);
        Witness w;
        w.inputs = {{"m", mp.Mtab.render(m)},
                    {"n", mp.Ntab.render(n)},
                    {"l", mp.Mtab.render(l)},
                    {"p", mp.Ntab.render(p)}};
        try {
          w.lhs = cell_str(derived_composition(mp, BicrossCell{m, n}, BicrossCell{l, p}));
        } catch (const FillerError& e) {
          w.lhs = e.what();
        }
        w.rhs = cell_str(bicross_multiply(mp, m, n, l, p));
        return w;
      },
      opt.counterexample_cap, opt.exec);
}

// Aggregates the axiom and inversion reports of one derived subpair into a
// single summary check.
CheckResult subpair_summary(const char* id, const MatchedPairData& mp, const VerifyOptions& opt) {
  CheckTimer timer;
  CheckResult summary;
  summary.id = id;
  for (const VerificationReport& sub :
       {verify_pair_axioms(mp, opt), verify_inverse_identities(mp, opt)}) {
    for (const CheckResult& c : sub.checks) {
      summary.instances += c.instances;
      for (const Witness& w : c.counterexamples) {
        if (static_cast<int>(summary.counterexamples.size()) >= opt.counterexample_cap) break;
        Witness tagged = w;
        tagged.inputs.insert(tagged.inputs.begin(), {"check", c.id});
        summary.counterexamples.push_back(std::move(tagged));
      }
    }
  }
  summary.status =
      summary.counterexamples.empty() ? CheckStatus::Pass : CheckStatus::Fail;
  summary.ms = timer.elapsed_ms();
  return summary;
}

}  // namespace

VerificationReport verify_pair_subject(const GroupTable& G, const std::string& spec_text,
                                       const SubgroupRef& M, const SubgroupRef& N,
                                       const VerifyOptions& opt) {
  VerificationReport report;
  report.group_spec = spec_text;
  report.group_order = G.order();
  report.subject = spec_text + " pair M=" + subgroup_str(M) + " N=" + subgroup_str(N);

  const bool exact = is_exact_pair(G, M, N);
  report.add(exactness_check("exact_pair", exact,
                             static_cast<std::int64_t>(M.size()) * N.size(), G.order(),
                             pair_intersection(M, N)));
  if (!exact) {
    for (const char* id : kPairCheckIds) report.add(detail::skipped_check(id));
    return report;
  }

  const PairFactorization pf = build_pair_factorization(G, M, N);
  const MatchedPairData mp = derive_matched_pair(pf);
  if (actions_trivial(mp)) report.subject += " [trivial actions]";

  for (auto& c : verify_pair_axioms(mp, opt).checks) report.add(std::move(c));
  for (auto& c : verify_inverse_identities(mp, opt).checks) report.add(std::move(c));
  for (auto& c : verify_interchange(mp, opt).checks) report.add(std::move(c));
  report.add(filler_bijection_check(mp, opt));
  report.add(bicross_group_check(mp));
  for (auto& c : verify_canonical_map(mp, pf, opt).checks) report.add(std::move(c));
  report.add(derived_agreement_check(mp, opt));
  return report;
}

VerificationReport verify_triple_subject(const GroupTable& G, const std::string& spec_text,
                                         const SubgroupRef& M, const SubgroupRef& N,
                                         const SubgroupRef& P, TripleMode mode,
                                         const VerifyOptions& opt) {
  VerificationReport report;
  report.group_spec = spec_text;
  report.group_order = G.order();
  report.subject = spec_text + " triple (" +
                   (mode == TripleMode::Strict ? "strict" : "relaxed") + ") M=" +
                   subgroup_str(M) + " N=" + subgroup_str(N) + " P=" + subgroup_str(P);

  const bool exact = is_exact_triple(G, M, N, P, TripleMode::Relaxed);
  const std::int64_t size_product = static_cast<std::int64_t>(M.size()) * N.size() * P.size();
  report.add(exactness_check("exact_triple", exact, size_product, G.order(), 0));
  if (!exact) {
    report.add(detail::skipped_check("products_closed"));
    for (const char* id : kTripleCheckIds) report.add(detail::skipped_check(id));
    return report;
  }

  const TripleFactorization tf = build_triple_factorization(G, M, N, P, TripleMode::Relaxed);
  {
    CheckTimer timer;
    CheckResult check;
    check.id = "products_closed";
    check.instances = 3;
    if (!tf.products_closed) {
      check.counterexamples.push_back(
          Witness{{{"mode", mode == TripleMode::Strict ? "strict" : "relaxed"}},
                  "a product set among MN, MP, NP is not a subgroup",
                  "strict matched-triple structure requires closed products"});
      check.status = CheckStatus::Fail;
    }
    check.ms = timer.elapsed_ms();
    report.add(std::move(check));
  }
  if (!tf.products_closed) {
    for (const char* id : kTripleCheckIds) report.add(detail::skipped_check(id));
    return report;
  }

  const MatchedTripleData mt = derive_matched_triple(tf);
  report.add(subpair_summary("subpair_mn_axioms", mt.pairMN, opt));
  report.add(subpair_summary("subpair_mp_axioms", mt.pairMP, opt));
  report.add(subpair_summary("subpair_np_axioms", mt.pairNP, opt));
  for (auto& c : verify_cube_identities(mt, opt).checks) report.add(std::move(c));
  for (auto& c : verify_triple_group(mt, opt).checks) report.add(std::move(c));
  return report;
}

VerificationReport run_verify_pair(const GroupSpec& spec, const std::string& m_gens,
                                   const std::string& n_gens, const VerifyOptions& opt) {
  const GroupTable G = build_group(spec);
  const SubgroupRef M = subgroup_generated(G, parse_generator_list(G, m_gens));
  const SubgroupRef N = subgroup_generated(G, parse_generator_list(G, n_gens));
  return verify_pair_subject(G, spec.text(), M, N, opt);
}

VerificationReport run_verify_triple(const GroupSpec& spec, const std::string& m_gens,
                                     const std::string& n_gens, const std::string& p_gens,
                                     TripleMode mode, const VerifyOptions& opt) {
  const GroupTable G = build_group(spec);
  const SubgroupRef M = subgroup_generated(G, parse_generator_list(G, m_gens));
  const SubgroupRef N = subgroup_generated(G, parse_generator_list(G, n_gens));
  const SubgroupRef P = subgroup_generated(G, parse_generator_list(G, p_gens));
  return verify_triple_subject(G, spec.text(), M, N, P, mode, opt);
}

std::vector<VerificationReport> run_survey(int max_order, const SurveyOptions& opt) {
  if (max_order < 1) throw ArgumentError("survey max order must be at least 1");
  if (max_order > 48)
    throw ArgumentError(
        "survey max order is capped at 48, the validity envelope of the "
        "subgroup enumeration");
  std::vector<VerificationReport> reports;
  for (const CatalogEntry& entry : build_catalog(max_order)) {
    const GroupTable& G = entry.table;
    const std::string spec_text = entry.spec.text();
    const auto subgroups = enumerate_subgroups(G, opt.gen_bound);
    for (const auto& [M, N] : enumerate_exact_pairs(G, subgroups, opt.include_degenerate))
      reports.push_back(verify_pair_subject(G, spec_text, M, N, opt.verify));
    if (opt.triples) {
      for (const auto& [M, N, P] :
           enumerate_exact_triples(G, subgroups, TripleMode::Strict, opt.include_degenerate))
        reports.push_back(
            verify_triple_subject(G, spec_text, M, N, P, TripleMode::Strict, opt.verify));
    }
  }
  return reports;
}

int exit_code_for(const std::vector<VerificationReport>& reports) {
  bool precondition_failed = false;
  bool check_failed = false;
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      if (!c.failed()) continue;
      if (c.id == "exact_pair" || c.id == "exact_triple" || c.id == "products_closed")
        precondition_failed = true;
      else
        check_failed = true;
    }
  }
  if (precondition_failed) return 2;
  if (check_failed) return 3;
  return 0;
}

}  // namespace mgt
