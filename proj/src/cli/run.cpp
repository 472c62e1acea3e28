#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "sharplp/errors.hpp"

namespace sharplp::cli {

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void check_exponent(double p) {
  if (!std::isfinite(p)) throw UsageError("exponent must be finite");
  if (std::abs(p) <= 1e-9) throw UsageError("exponent " + format_number(p) + " is within 1e-9 of 0");
  for (double special : {1.0, 2.0}) {
    const double d = std::abs(p - special);
    if (d > 0 && d <= 1e-9) {
      throw UsageError("exponent " + format_number(p) + " is within 1e-9 of " + format_number(special));
    }
  }
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1);
  return v;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

CommandOutput execute(const CommandConfig& cfg) {
  switch (cfg.command) {
    case Command::contour: return run_contour(cfg);
    case Command::verify: return run_verify(cfg);
    case Command::audit: return run_audit(cfg);
    case Command::sharpness: return run_sharpness(cfg);
    case Command::schatten: return run_schatten(cfg);
    case Command::means: return run_means(cfg);
  }
  throw UsageError("unknown command");
}

int run(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  CommandOutput result;
  try {
    result = execute(cfg);
  } catch (const UsageError& e) {
    err << "sharplp " << to_string(cfg.command) << ": " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "sharplp " << to_string(cfg.command) << ": " << e.what() << "\n";
    return 2;
  }
  if (cfg.out_path) {
    std::ofstream file(*cfg.out_path, std::ios::binary);
    if (!file) {
      err << "sharplp: cannot open " << *cfg.out_path << " for writing\n";
      return 2;
    }
    file << result.text;
  } else {
    out << result.text;
  }
  return result.passed ? 0 : 1;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<CommandConfig> cfg;
  try {
    cfg = parse(argc, argv, out);
  } catch (const UsageError& e) {
    err << "sharplp: " << e.what() << "\n";
    return 2;
  }
  if (!cfg) return 0;
  return run(*cfg, out, err);
}

}  // namespace sharplp::cli
