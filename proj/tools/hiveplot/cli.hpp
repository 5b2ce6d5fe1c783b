#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hive/axis_order.hpp"
#include "hive/crossing_minimizer.hpp"
#include "hive/graph_io.hpp"

namespace hiveplot {

enum class Command { kLayout, kBench, kValidate };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;
inline constexpr int kExitValidation = 4;

inline constexpr const char* kConfigEnv = "HIVEPLOT_CONFIG";

struct BenchSettings {
  std::size_t n_min = 60;
  std::size_t n_max = 510;
  std::size_t n_step = 30;
  std::size_t partitions = 6;
  std::size_t replicates = 5;
  std::vector<std::size_t> gaps{1, 2, 3};
  std::size_t threads = 1;
  std::string csv;  // empty or "-" writes to stdout
};

struct RunConfig {
  Command command = Command::kLayout;
  std::string input;
  std::optional<hive::GraphFormat> format;
  std::optional<std::size_t> k;
  std::size_t gaps = 1;
  std::uint64_t seed = 1;
  std::size_t max_iter = hive::kDefaultPhase1Iterations;
  std::size_t max_iter_intra = hive::kDefaultPhase2Iterations;
  std::size_t brute_force_threshold = hive::kDefaultBruteForceCap;
  hive::AnnealSchedule anneal;
  std::string svg_path;
  std::string json_path;
  std::vector<std::string> expand;  // axis ids or "all"
  bool symmetric_intra = false;
  bool scale_degree = false;
  bool labels = true;
  BenchSettings bench;
};

struct ParseResult {
  std::optional<RunConfig> config;
  int exit_code = kExitOk;  // meaningful when config is empty
};

/// Parses a command line. Help and usage errors are written to `out` / `err`
/// and come back without a config. A config file named by --config or by
/// HIVEPLOT_CONFIG supplies defaults that flags override.
ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Executes a parsed command. Artifacts go to the configured paths; the
/// summary and diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hiveplot
