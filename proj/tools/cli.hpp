#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fatpoints::cli {

enum class Command { Validate, Conjugate, Construct, Hilbert, Reduce, Star, Asymptotic, Bounds };
enum class OutputFormat { Human, Json };

struct CliConfig {
  Command command = Command::Validate;
  std::string delta;
  std::uint64_t seed = 0;
  std::optional<int> stop_at;
  std::optional<int> max_degree;
  OutputFormat output = OutputFormat::Human;
  std::optional<std::string> out_path;

  std::string scheme_path;
  std::string lines_path;
  int t = 3;
  std::string variant = "plain";
  int t_min = 1;
  int t_max = 0;
  int step = 1;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

/// Parses argv (argv[0] is the program name) and runs one command.
/// Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fatpoints::cli
