#include "almosthopf/report.hpp"

namespace almosthopf {

const RuleCheck* CheckReport::find(std::string_view rule) const {
  for (const auto& c : checks)
    if (c.rule == rule) return &c;
  return nullptr;
}

bool CheckReport::rule_passed(std::string_view rule) const {
  const RuleCheck* c = find(rule);
  return c != nullptr && c->passed;
}

std::string CheckReport::to_text() const {
  std::string out;
  for (const auto& c : checks) {
    if (c.passed) {
      out += "PASS " + c.rule + "\n";
      continue;
    }
    out += "FAIL " + c.rule + " (" + std::to_string(c.violation_count) +
           " violation" + (c.violation_count == 1 ? "" : "s") + ")\n";
    if (!c.witnesses.empty()) {
      const Witness& w = c.witnesses.front();
      out += "  at (";
      for (std::size_t i = 0; i < w.where.size(); ++i)
        out += (i ? ", " : "") + w.where[i];
      out += "): " + w.lhs + " != " + w.rhs + "\n";
    }
  }
  out += passed ? "all checks passed\n" : "FAILED\n";
  return out;
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : c.witnesses)
      witnesses.push_back(
          {{"where", w.where}, {"lhs", w.lhs}, {"rhs", w.rhs}});
    checks_json.push_back({{"rule", c.rule},
                           {"passed", c.passed},
                           {"violationCount", c.violation_count},
                           {"witnesses", witnesses}});
  }
  return {{"passed", passed}, {"checks", checks_json}};
}

void RuleRecorder::fail(std::vector<std::string> where, std::string lhs,
                        std::string rhs) {
  check_.passed = false;
  ++check_.violation_count;
  if (check_.witnesses.size() < kMaxWitnessesPerRule)
    check_.witnesses.push_back(
        {std::move(where), std::move(lhs), std::move(rhs)});
}

void RuleRecorder::finish(CheckReport& into) {
  if (!check_.passed) into.passed = false;
  into.checks.push_back(std::move(check_));
}

}  // namespace almosthopf
