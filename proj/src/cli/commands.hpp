#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sharplp/cli.hpp"

namespace sharplp::cli {

using Json = nlohmann::ordered_json;

CommandOutput run_contour(const CommandConfig& cfg);
CommandOutput run_verify(const CommandConfig& cfg);
CommandOutput run_audit(const CommandConfig& cfg);
CommandOutput run_sharpness(const CommandConfig& cfg);
CommandOutput run_schatten(const CommandConfig& cfg);
CommandOutput run_means(const CommandConfig& cfg);

/// %.17g, the round-trip format used for every CSV number.
std::string format_number(double x);

/// Rejects p within 1e-9 of 0, and within 1e-9 of 1 or 2 unless exactly equal.
void check_exponent(double p);

/// n evenly spaced values from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, int n);

std::string dump(const Json& j);

}  // namespace sharplp::cli
