#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "serialize.hpp"
#include "source.hpp"

namespace dlct::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  FunctionSpec function;
  Format format = Format::Json;
  std::optional<std::string> output;
  unsigned threads = 1;
  unsigned trials = 20;
  std::string kind = "dlct";
  std::string check;
  std::string target;
  std::string mode = "monomial";
  std::optional<Value> max_dlu;
  std::optional<std::uint64_t> budget;
};

inline constexpr const char* kCheckNames =
    "identities, bounds, ea-invariance, affine-invariance, apn-dual, plateaued-dual, kloosterman-mod8, cross-path";
inline constexpr const char* kTargetNames =
    "table2, example-ccz, example-ea, inverse-theorem, gold, quadratic, bracken-leander, kasami";

// Each returns the process exit code; library and usage errors propagate as exceptions.
int cmd_table(const RunConfig& cfg, std::ostream& out);
int cmd_analyze(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_reproduce(const RunConfig& cfg, std::ostream& out);
int cmd_search(const RunConfig& cfg, std::ostream& out);

std::vector<CheckResult> run_check(const RunConfig& cfg);

// Parses argv (program name first), dispatches, and maps errors to exit codes.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dlct::cli
