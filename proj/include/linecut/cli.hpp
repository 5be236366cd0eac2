#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace linecut {

// Exit codes shared by all commands.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verify_failed = 1;
inline constexpr int exit_parse_failed = 2;
inline constexpr int exit_io_failed = 3;
inline constexpr int exit_guard_violation = 4;

struct EnumerateArgs {
  std::string input;
  int k = 6;
  std::uint32_t cone_limit = 0; // 0 = unlimited
  std::string roots = "all";    // "all" | "outputs" | comma-separated ids
  std::string output;           // empty = stdout
  std::string stats;            // empty = none
  int jobs = 0;                 // 0 = hardware default
  std::string format = "jsonl"; // jsonl | csv
};

struct BenchArgs {
  std::vector<std::string> inputs;
  std::vector<int> ks;
  std::vector<std::uint32_t> cone_limits; // 0 = unlimited; empty = [0]
  std::string report;                     // empty = stdout; .md = Markdown, else CSV
  int jobs = 0;
};

struct VerifyArgs {
  std::uint64_t seed = 1;
  std::uint32_t trials = 50;
  std::uint32_t max_nodes = 10;
  int k = 3;
};

int cmd_enumerate(const EnumerateArgs& args);
int cmd_bench(const BenchArgs& args);
int cmd_verify(const VerifyArgs& args);

/// Parses argv (enumerate | bench | verify) and dispatches. Usage errors
/// exit with exit_guard_violation; --help with exit_ok.
int run_cli(int argc, const char* const* argv);

} // namespace linecut
