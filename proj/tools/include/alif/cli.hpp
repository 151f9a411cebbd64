#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace alif::cli {

enum class Command { decompose, symbol, spectrum, sweep, acs, counterexample };

std::string to_string(Command c);

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadConfig = 2;

/// Fully describes one invocation; every output JSON embeds it.
struct RunConfig {
  Command command = Command::counterexample;
  /// Inline JSON, a JSON file path, or one of: uniform, triangular,
  /// counterexample, counterexample-normalized.
  std::string filter = "triangular";
  /// Inline JSON, a JSON file path, a positive number (constant length), or
  /// "counterexample". Unset: extrema-based lengths for decompose, 8 elsewhere.
  std::optional<std::string> length;
  std::filesystem::path signal;
  /// Output directory. Unset: the primary artifact goes to stdout.
  std::optional<std::filesystem::path> out;
  std::size_t n = 64;
  std::vector<std::size_t> m{1, 2, 4, 8, 16};
  std::vector<std::size_t> sizes{64, 128, 256};
  std::size_t grid_x = 101;
  std::size_t grid_theta = 201;
  double delta = 1e-3;
  std::size_t max_inner = 200;
  std::size_t max_imfs = 32;
  double multiplier = 2.0;  ///< extrema-based length scale for decompose
  std::uint64_t seed = 42;
  bool dump_nodes = false;  ///< counterexample: also write filter_nodes.csv
  bool dump_grid = false;   ///< counterexample: also write kappa_grid.csv
};

/// Executes the command. Returns kExitOk, kExitCheckFailed (counterexample
/// verification failed) or kExitBadConfig (missing files, invalid input).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alif::cli
