#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sharplp::cli {

enum class Command { contour, verify, audit, sharpness, schatten, means };
enum class Format { csv, json };
enum class Precision { Double, High };

const char* to_string(Command c) noexcept;

/// Parsed command line. Unset optionals take per-command defaults in run().
struct CommandConfig {
  Command command = Command::contour;
  std::optional<double> alpha_min;
  std::optional<double> alpha_max;
  std::optional<double> p_min;
  std::optional<double> p_max;
  std::optional<int> na;
  std::optional<int> np;
  std::vector<double> p_list;
  std::uint64_t seed = 0;
  std::optional<int> trials;
  std::optional<int> points;
  std::vector<int> dims;
  std::vector<double> c_values;  // --c and --c-grid together
  std::optional<double> r;
  bool conjectural = false;
  std::optional<std::string> out_path;
  Format format = Format::json;
  Precision precision = Precision::Double;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// SHARPLP_PRECISION=double|high; unset means double.
Precision precision_from_env();

/// Parses argv[1..]. Returns nullopt after printing help to `out`. Throws UsageError.
std::optional<CommandConfig> parse(int argc, const char* const* argv, std::ostream& out);

/// Result of a command before it is written anywhere.
struct CommandOutput {
  std::string text;
  bool passed = true;
};

CommandOutput execute(const CommandConfig& cfg);

/// 0 = every check passed, 1 = a mathematical check failed, 2 = usage error.
int run(const CommandConfig& cfg, std::ostream& out, std::ostream& err);

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sharplp::cli
