#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sdg::cli {

enum ExitStatus : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kPreconditionError = 3,
  kCapExceeded = 4,
};

struct CommandRequest {
  std::string subcommand;  // analyze, synth-nilpotent, synth-converge, synth-fixed-points, verify, enumerate, export-dot
  std::filesystem::path graph;
  std::optional<std::filesystem::path> fds;
  std::optional<std::filesystem::path> sub;
  std::optional<std::filesystem::path> out;
  std::optional<std::size_t> steps;
  std::optional<std::size_t> cycles;
  std::optional<std::size_t> sample;
  std::size_t cap = 0;  // 0: default, or SDG_CAP when set
  std::uint64_t seed = 0;
  bool json = false;
};

struct RunResult {
  int status = kOk;
  std::string report;  // stdout
  std::string error;   // stderr
};

// Executes a parsed request. Never throws; failures map to exit statuses.
RunResult run(const CommandRequest& request);

// argv front end (CLI11). `args` excludes the program name.
RunResult run_args(const std::vector<std::string>& args);

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace sdg::cli
