// Acceptance suite driver: runs the published-limit checks and prints one
// pass/fail line per criterion. With arguments, runs only those check ids.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "szilard/verify.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));

  auto results = szilard::verify::run_suite(ids);
  int failures = 0;
  for (const auto& result : results) {
    std::cout << szilard::verify::format_line(result) << "\n";
    if (!result.pass) ++failures;
  }
  return failures;
}
