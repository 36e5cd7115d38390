#pragma once

// The acceptance suite: one exact check per criterion, shared by the
// `verify` subcommand and the acceptance test binary.

#include <functional>
#include <string>
#include <vector>

namespace sc::acceptance {

struct Result {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // deterministic: counts only, never timings
};

struct Options {
  int threads = 1;
  int fuzz_polynomials = 1000;
};

Result stringCounts(const Options& options);       // 1
Result injectivity(const Options& options);        // 2
Result semigroupClosure(const Options& options);   // 3
Result coneSaturation(const Options& options);     // 4
Result demazureFaces(const Options& options);      // 5
Result separatingForms(const Options& options);    // 6
Result hilbertSoundness(const Options& options);   // 7
Result oracleCrossCheck(const Options& options);   // 8
Result determinism(const Options& options);        // 9

// Runs every criterion in order; `progress` sees each result as it finishes.
std::vector<Result> runAll(const Options& options,
                           const std::function<void(const Result&)>& progress = {});

std::string formatLine(const Result& r);
std::string formatReport(const std::vector<Result>& results);

}  // namespace sc::acceptance
