// Runs every acceptance criterion and prints one line each.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "stringcone/acceptance.hpp"

int main(int argc, char** argv) {
  sc::acceptance::Options options;
  if (argc > 1) options.threads = std::max(1, std::atoi(argv[1]));
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  const auto results = sc::acceptance::runAll(options, [&](const sc::acceptance::Result& r) {
    std::printf("%s\n", sc::acceptance::formatLine(r).c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  });
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("summary %zu/%zu passed in %.1f s\n", results.size() - failed, results.size(), seconds);
  return failed == 0 && results.size() == 9 ? 0 : 1;
}
