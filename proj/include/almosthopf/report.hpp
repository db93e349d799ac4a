// Outcome of a verification run: one entry per checked rule, each carrying
// the witnesses of its violations. Verifiers return reports; they do not
// throw on mathematical failure.

#ifndef ALMOSTHOPF_REPORT_HPP
#define ALMOSTHOPF_REPORT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace almosthopf {

// A single counterexample: the tuple of elements it happened at, and the two
// evaluated sides that should have agreed.
struct Witness {
  std::vector<std::string> where;
  std::string lhs;
  std::string rhs;
};

struct RuleCheck {
  std::string rule;
  bool passed = true;
  std::size_t violation_count = 0;
  std::vector<Witness> witnesses;  // capped; violation_count is exact
};

struct CheckReport {
  bool passed = true;
  std::vector<RuleCheck> checks;

  const RuleCheck* find(std::string_view rule) const;
  bool rule_passed(std::string_view rule) const;

  std::string to_text() const;
  nlohmann::json to_json() const;
};

// Reports keep at most this many witnesses per rule.
inline constexpr std::size_t kMaxWitnessesPerRule = 8;

// Accumulates one rule's outcome while a verifier scans its domain.
class RuleRecorder {
 public:
  explicit RuleRecorder(std::string rule) { check_.rule = std::move(rule); }

  void fail(std::vector<std::string> where, std::string lhs, std::string rhs);
  void finish(CheckReport& into);

 private:
  RuleCheck check_;
};

}  // namespace almosthopf

#endif
