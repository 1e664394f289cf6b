#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace zetalab::validation {

struct AcceptanceOptions {
  unsigned threads = 0;
  std::vector<int> only;   // criterion numbers; empty runs all
  std::string archive_dir;  // ladder CSVs are written here when set
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

// Evaluates the acceptance criteria, printing one PASS/FAIL line per
// criterion to `out`. Returns true when every selected criterion passed.
bool run_acceptance(const AcceptanceOptions& opts, std::ostream& out,
                    std::vector<CriterionResult>* results = nullptr);

}  // namespace zetalab::validation
