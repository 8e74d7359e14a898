#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace formdual {

struct Check {
  std::string id;      // sortable, e.g. "03.kernel-dims"
  std::string anchor;  // what the check asserts, in words
  bool pass = false;
  std::string detail;
  int criterion = 0;   // acceptance criterion number 1..13
};

struct VerificationOutcome {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;  // true iff every check passes (vacuously for no checks)
  void add(std::string id, int criterion, std::string anchor, bool pass, std::string detail = "");
  void append(const VerificationOutcome& other);
  void sort();  // by id; ties keep insertion order
};

enum class ReportFormat { text, json };

void emit_report(const VerificationOutcome& outcome, ReportFormat format, std::ostream& os);

}  // namespace formdual
