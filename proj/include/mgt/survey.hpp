#pragma once

#include <string>
#include <vector>

#include "mgt/factorization.hpp"
#include "mgt/group_spec.hpp"
#include "mgt/matched_pair.hpp"
#include "mgt/report.hpp"

namespace mgt {

struct SurveyOptions {
  bool triples = false;
  bool include_degenerate = false;
  int gen_bound = 3;
  VerifyOptions verify;
};

// Runs the full verifier battery on one subgroup pair of G.  The report
// carries, in order: exactness, the composition-rule and unit-law checks,
// the inversion identities, the interchange law, filler uniqueness, the
// bicrossproduct group axioms, the canonical map checks, and the agreement
// of the filler-diagram composition with the bicrossproduct formula.
VerificationReport verify_pair_subject(const GroupTable& G, const std::string& spec_text,
                                       const SubgroupRef& M, const SubgroupRef& N,
                                       const VerifyOptions& opt = {});

// Same for a subgroup triple: exactness (with the strict subgroup-closure
// requirement separated out as "products_closed"), the three subpair axiom
// summaries, the cube identities, and the composition-table verdicts.
VerificationReport verify_triple_subject(const GroupTable& G, const std::string& spec_text,
                                         const SubgroupRef& M, const SubgroupRef& N,
                                         const SubgroupRef& P, TripleMode mode,
                                         const VerifyOptions& opt = {});

// CLI entry points: build the group from its spec, the subgroups from
// generator lists, and verify.  Throws ParseError / ArgumentError /
// SizeLimitError for unusable input; factorization problems are reported
// in the result, not thrown.
VerificationReport run_verify_pair(const GroupSpec& spec, const std::string& m_gens,
                                   const std::string& n_gens, const VerifyOptions& opt = {});
VerificationReport run_verify_triple(const GroupSpec& spec, const std::string& m_gens,
                                     const std::string& n_gens, const std::string& p_gens,
                                     TripleMode mode, const VerifyOptions& opt = {});

// Batch driver: every exact pair (and, on request, every strict exact
// triple) of every catalog group of order <= max_order, in deterministic
// order.  max_order is capped at 48, the validity envelope of the
// subgroup enumeration.
std::vector<VerificationReport> run_survey(int max_order, const SurveyOptions& opt = {});

// Exit-code contract shared by the CLI and the tests:
//   0 all checks pass, 2 precondition failed (not-exact input),
//   3 at least one verification check failed (1 is reserved for
//   usage/parse errors, raised as exceptions before a report exists).
int exit_code_for(const std::vector<VerificationReport>& reports);
inline int exit_code_for(const VerificationReport& report) {
  return exit_code_for(std::vector<VerificationReport>{report});
}

}  // namespace mgt
