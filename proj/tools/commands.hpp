#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "codedomain/search_budget.hpp"

namespace cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitPartial = 3;
inline constexpr int kExitInternal = 4;

/// Effective configuration of one run; every field a subcommand reads is
/// echoed into its manifest.
struct RunConfig {
  std::string command;
  std::string out_dir = "out";
  bool svg = false;
  codedomain::SearchBudget budget;

  unsigned q = 2;
  unsigned n = 8;
  std::string m = "2";
  std::optional<unsigned> d;
  bool linear = false;
  unsigned n_max = 8;
  std::string strategy = "exhaustive";
  unsigned grid = 256;
  long precision = 53;
  std::string curves = "vg";
  std::uint64_t trials = 200;
  std::string target;
  std::uint64_t count = 3;
  std::string code_path;
  std::string ops;
  std::string curve;
  std::int64_t grid_n = 16;
  std::uint64_t timeout_ms = 10000;
};

int cmd_bounds(const RunConfig& cfg);
int cmd_enumerate(const RunConfig& cfg);
int cmd_sample(const RunConfig& cfg);
int cmd_oracle(const RunConfig& cfg);
int cmd_spoil(const RunConfig& cfg);
int cmd_realize(const RunConfig& cfg);
int cmd_strip(const RunConfig& cfg);
int cmd_approx(const RunConfig& cfg);

}  // namespace cli
