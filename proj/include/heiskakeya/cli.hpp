#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace heiskakeya::cli {

enum class Command {
  NONE,
  DIM,
  KAKEYA_BUILD,
  KAKEYA_VERIFY,
  DUALITY_VERIFY,
  MARSTRAND,
  COAREA,
  PIPELINE,
};

/// Invalid flags or malformed config; maps to exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::NONE;
  bool help = false;  // --help consumed; execute() is a no-op

  std::uint64_t seed = 0;
  std::string out;

  // scale ladder
  double delta_max = 0.3;
  double delta_min = 0.0375;  // 0.3 * 2^-3
  int levels = 7;
  int stop_k = 2000;

  // set / family / ifs source
  std::string set_name;     // plane|taxis|xseg|cube|cantor2|cantor4
  double size = 1.0;
  std::string family_src;   // path, or inline JSON starting with '{'
  std::string ifs_src;      // path, or inline JSON

  std::string metric = "euclidean";

  // kakeya build / verify
  int m = 64;
  std::string placement = "origin";
  int angles = 64;
  double ang_tol = 1e-9;

  // duality verify
  long long samples = 1000000;

  // marstrand
  int thetas = 32;

  // coarea
  double alpha = 3.0;
  int slices = 8;
  double slab_lo = 0.0, slab_hi = 0.0;
  bool slab_set = false;

  // pipeline
  int c_grid = 16;
};

/// Parses argv-style tokens (without the program name).  Flags override
/// values from an optional --config JSON file, which override defaults.
/// Throws ParseError on invalid flags, unknown config keys or ladder
/// violations.
RunConfig parse_config(const std::vector<std::string>& args);

/// Dispatches a parsed config; returns the process exit code (0 success,
/// 1 runtime failure).  Output files are written atomically.
int execute(const RunConfig& config);

/// parse_config + execute with error mapping: 2 on parse/config errors,
/// 1 on runtime failures.
int run(const std::vector<std::string>& args);

}  // namespace heiskakeya::cli
