#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cgacol::cli {

enum class Subcommand { Check, Dist, Selftest };
enum class OutputFormat { Text, Json };

struct CliConfig {
  Subcommand subcommand = Subcommand::Check;
  std::string scene_path;
  OutputFormat output_format = OutputFormat::Text;
  bool skip_adjacent = false;
  bool report_all_pairs = false;
};

/// Process exit codes, identical for text and JSON output.
inline constexpr int kExitOk = 0;         // no collision / all checks pass
inline constexpr int kExitCollision = 1;  // collision found / a check failed
inline constexpr int kExitInput = 2;      // usage or input error

int run_check(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_dist(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_selftest(std::ostream& out);

/// Parses `args` (without the program name) and runs the subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cgacol::cli
