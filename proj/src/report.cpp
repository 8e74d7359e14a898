#include "formdual/report.hpp"

#include <algorithm>

#include "formdual/json_io.hpp"

namespace formdual {

bool VerificationOutcome::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void VerificationOutcome::add(std::string id, int criterion, std::string anchor, bool pass, std::string detail) {
  checks.push_back({std::move(id), std::move(anchor), pass, std::move(detail), criterion});
}

void VerificationOutcome::append(const VerificationOutcome& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

void VerificationOutcome::sort() {
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
}

void emit_report(const VerificationOutcome& outcome, ReportFormat format, std::ostream& os) {
  VerificationOutcome o = outcome;
  o.sort();
  const auto failed = std::count_if(o.checks.begin(), o.checks.end(), [](const Check& c) { return !c.pass; });
  if (format == ReportFormat::json) {
    Json checks = Json::array();
    for (const auto& c : o.checks)
      checks.push_back({{"id", c.id},
                        {"criterion", c.criterion},
                        {"anchor", c.anchor},
                        {"status", c.pass ? "pass" : "fail"},
                        {"detail", c.detail}});
    Json j = {{"suite", o.suite},
              {"status", o.passed() ? "pass" : "fail"},
              {"total", o.checks.size()},
              {"failed", failed},
              {"checks", checks}};
    os << j.dump(2) << "\n";
    return;
  }
  os << "suite " << o.suite << "\n";
  for (const auto& c : o.checks) {
    os << "  [" << c.id << "] " << c.anchor << ": " << (c.pass ? "PASS" : "FAIL") << "\n";
    if (!c.detail.empty()) os << "      " << c.detail << "\n";
  }
  os << o.checks.size() << " checks, " << failed << " failed: " << (o.passed() ? "PASS" : "FAIL") << "\n";
}

}  // namespace formdual
