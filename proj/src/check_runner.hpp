#pragma once

// Internal helper shared by the verifier implementations: runs one
// exhaustive sweep through the kernels layer and assembles a CheckResult.

#include <string>
#include <utility>

#include "mgt/kernels.hpp"
#include "mgt/report.hpp"

namespace mgt::detail {

// pred(i) returns true when instance i violates the identity; witness(i)
// renders that instance.  Violating indices arrive in ascending order.
template <class Pred, class WitnessFn>
CheckResult run_check(std::string id, std::int64_t total, Pred&& pred, WitnessFn&& witness,
                      int cap, kernels::ExecMode mode) {
  CheckTimer timer;
  CheckResult result;
  result.id = std::move(id);
  result.instances = total;
  for (std::int64_t i : kernels::find_violations(total, pred, cap, mode))
    result.counterexamples.push_back(witness(i));
  result.status = result.counterexamples.empty() ? CheckStatus::Pass : CheckStatus::Fail;
  result.ms = timer.elapsed_ms();
  return result;
}

inline CheckResult skipped_check(std::string id) {
  CheckResult result;
  result.id = std::move(id);
  result.status = CheckStatus::Skipped;
  result.instances = 0;
  return result;
}

}  // namespace mgt::detail
