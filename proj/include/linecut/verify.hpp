#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace linecut {

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::uint32_t trials = 50;
  std::uint32_t max_nodes = 10;
  int k = 3;
};

struct PropertyResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_counterexample; // edge list, k, offending set
};

struct VerifyReport {
  std::vector<PropertyResult> properties;
  std::uint64_t total_checks = 0;
  bool ok = true;
};

/// Random-DAG cross-checks of every library invariant against the brute
/// oracles; one DAG per trial, every gate as root. Properties whose oracle
/// guard a cone exceeds are skipped for that cone. When `log` is given each
/// property prints one "name: checks=N failures=M" line, plus the first
/// counterexample of each failing property.
VerifyReport run_verify(const VerifyOptions& options, std::ostream* log = nullptr);

} // namespace linecut
