// Runs every acceptance criterion and prints one PASS/FAIL line each.
//   zetalab_acceptance [--only 7,9] [--archive DIR]

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "zetalab/validation/acceptance.hpp"

int main(int argc, char** argv) {
  zetalab::validation::AcceptanceOptions opts;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      std::string item;
      while (std::getline(ss, item, ',')) opts.only.push_back(std::stoi(item));
    } else if (arg == "--archive" && i + 1 < argc) {
      opts.archive_dir = argv[++i];
    } else {
      std::cerr << "usage: " << argv[0] << " [--only ids] [--archive dir]\n";
      return 2;
    }
  }
  if (const char* t = std::getenv("ZETALAB_THREADS")) opts.threads = static_cast<unsigned>(std::atoi(t));
  std::vector<zetalab::validation::CriterionResult> results;
  const bool ok = zetalab::validation::run_acceptance(opts, std::cout, &results);
  int passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  std::cout << passed << "/" << results.size() << " criteria passed" << std::endl;
  return ok ? 0 : 1;
}
