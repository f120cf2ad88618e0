#pragma once

#include <string>
#include <vector>

// Built-in verification suite: every published limit and curve property the
// library is expected to reproduce, each pinned to its tolerance. Exposed
// both as the `verify` CLI command and as the acceptance test binary.

namespace szilard::verify {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // measured values, one clause per ';'
};

/// Run one numbered check (1..11). Throws on unknown id.
CheckResult run_check(int id);

/// Run the whole suite (or a subset of ids); results ordered by id.
std::vector<CheckResult> run_suite(const std::vector<int>& ids = {});

/// Render "PASS|FAIL  <id>. <name>: <detail>".
std::string format_line(const CheckResult& result);

}  // namespace szilard::verify
