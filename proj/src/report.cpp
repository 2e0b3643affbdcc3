#include "mgt/report.hpp"

#include <sstream>

namespace mgt {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

bool VerificationReport::all_passed() const {
  for (const auto& c : checks)
    if (c.failed()) return false;
  return true;
}

const CheckResult* VerificationReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

json to_json(const Witness& w) {
  json inputs = json::object();
  for (const auto& [name, value] : w.inputs) inputs[name] = value;
  return json{{"inputs", inputs}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

json to_json(const CheckResult& c) {
  json counterexamples = json::array();
  for (const auto& w : c.counterexamples) counterexamples.push_back(to_json(w));
  return json{{"id", c.id},
              {"status", to_string(c.status)},
              {"instances", c.instances},
              {"counterexamples", counterexamples},
              {"ms", c.ms}};
}

json to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return json{{"subject", r.subject},
              {"group", json{{"spec", r.group_spec}, {"order", r.group_order}}},
              {"checks", checks}};
}

json to_json(const std::vector<VerificationReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

json canonical_json(const json& j) {
  json out = j;
  if (out.is_array()) {
    for (auto& item : out) item = canonical_json(item);
  } else if (out.is_object()) {
    for (auto& [key, value] : out.items()) {
      if (key == "ms")
        value = 0.0;
      else
        value = canonical_json(value);
    }
  }
  return out;
}

namespace {

void render_check(std::ostringstream& out, const CheckResult& c) {
  const char* tag = c.status == CheckStatus::Pass   ? "PASS"
                    : c.status == CheckStatus::Fail ? "FAIL"
                                                    : "SKIP";
  out << "  [" << tag << "] " << c.id << "  (" << c.instances << " instances, " << c.ms
      << " ms)\n";
  for (const auto& w : c.counterexamples) {
    out << "         at ";
    for (size_t i = 0; i < w.inputs.size(); ++i) {
      if (i) out << ", ";
      out << w.inputs[i].first << "=" << w.inputs[i].second;
    }
    out << ": lhs=" << w.lhs << " rhs=" << w.rhs << "\n";
  }
}

}  // namespace

std::string render_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "== " << r.subject << " (group " << r.group_spec << ", order " << r.group_order
      << ") ==\n";
  for (const auto& c : r.checks) render_check(out, c);
  std::int64_t failed = 0;
  for (const auto& c : r.checks) failed += c.failed() ? 1 : 0;
  out << (failed == 0 ? "  all checks passed\n"
                      : "  " + std::to_string(failed) + " check(s) FAILED\n");
  return out.str();
}

std::string render_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  std::int64_t failed_subjects = 0;
  for (const auto& r : reports) {
    std::int64_t failed = 0, instances = 0;
    for (const auto& c : r.checks) {
      failed += c.failed() ? 1 : 0;
      instances += c.instances;
    }
    if (failed) ++failed_subjects;
    out << (failed ? "FAIL " : "ok   ") << r.subject << "  (" << r.checks.size() << " checks, "
        << instances << " instances)\n";
  }
  out << reports.size() << " subject(s), " << failed_subjects << " with failures\n";
  return out.str();
}

}  // namespace mgt
