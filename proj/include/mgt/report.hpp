#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace mgt {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

// One concrete violating (or otherwise notable) instance of a check.
struct Witness {
  // Named inputs in a fixed order, each rendered as an element string.
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string lhs;
  std::string rhs;
};

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  // Exhaustive enumeration size of the check, independent of the
  // counterexample cap.
  std::int64_t instances = 0;
  std::vector<Witness> counterexamples;
  double ms = 0.0;

  bool failed() const { return status == CheckStatus::Fail; }
};

// Structured pass/fail results for one subject (a group with chosen
// subgroups), one entry per verified identity.
struct VerificationReport {
  std::string subject;
  std::string group_spec;
  std::int32_t group_order = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* find(const std::string& id) const;
  void add(CheckResult check) { checks.push_back(std::move(check)); }
};

using json = nlohmann::ordered_json;

json to_json(const Witness& w);
json to_json(const CheckResult& c);
json to_json(const VerificationReport& r);
json to_json(const std::vector<VerificationReport>& reports);

// The canonical comparison form: identical JSON with every timing field set
// to zero, so that two runs with the same flags are byte-identical.
json canonical_json(const json& j);

// Human-readable rendering (one line per check plus counterexamples).
std::string render_text(const VerificationReport& r);
std::string render_text(const std::vector<VerificationReport>& reports);

// Small helper to time a check body and record milliseconds.
class CheckTimer {
public:
  CheckTimer() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace mgt
