#include <cstdlib>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "sharplp/cli.hpp"

namespace sharplp::cli {

const char* to_string(Command c) noexcept {
  switch (c) {
    case Command::contour: return "contour";
    case Command::verify: return "verify";
    case Command::audit: return "audit";
    case Command::sharpness: return "sharpness";
    case Command::schatten: return "schatten";
    case Command::means: return "means";
  }
  return "contour";
}

Precision precision_from_env() {
  const char* v = std::getenv("SHARPLP_PRECISION");
  if (v == nullptr || *v == '\0') return Precision::Double;
  const std::string s(v);
  if (s == "double") return Precision::Double;
  if (s == "high") return Precision::High;
  throw UsageError("SHARPLP_PRECISION must be 'double' or 'high', got '" + s + "'");
}

namespace {

struct Raw {
  double alpha_min = 0, alpha_max = 0, p_min = 0, p_max = 0, c = 0, r = 0;
  int na = 0, np = 0, trials = 0, points = 0;
  std::vector<double> p_list, c_grid;
  std::vector<int> dims;
  std::uint64_t seed = 0;
  std::string out, format;
  bool conjectural = false;
};

void add_common(CLI::App* sub, Raw& raw) {
  sub->add_option("--seed", raw.seed, "RNG seed")->capture_default_str();
  sub->add_option("--out", raw.out, "write output to this file instead of stdout");
  sub->add_option("--format", raw.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

void add_grid(CLI::App* sub, Raw& raw) {
  sub->add_option("--alpha-min", raw.alpha_min);
  sub->add_option("--alpha-max", raw.alpha_max);
  sub->add_option("--na", raw.na, "alpha grid count");
}

void add_p_list(CLI::App* sub, Raw& raw) {
  sub->add_option("--p-list", raw.p_list, "comma separated exponents")->delimiter(',')->allow_extra_args(false);
}

}  // namespace

std::optional<CommandConfig> parse(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Sharpened L^p triangle inequality toolkit", "sharplp"};
  app.require_subcommand(1);
  Raw raw;

  auto* contour = app.add_subcommand("contour", "grid of the constant-case factor as alpha,p,value rows");
  add_grid(contour, raw);
  contour->add_option("--p-min", raw.p_min);
  contour->add_option("--p-max", raw.p_max);
  contour->add_option("--np", raw.np, "p grid count");
  add_common(contour, raw);

  auto* verify = app.add_subcommand("verify", "randomized campaign for the main inequality");
  add_p_list(verify, raw);
  verify->add_option("--trials", raw.trials, "instances per exponent");
  verify->add_option("--points", raw.points, "maximum number of points per instance");
  add_common(verify, raw);

  auto* audit = app.add_subcommand("audit", "sign-change audit of the derivative chain");
  audit->add_option("--c", raw.c, "single c = 1/p");
  audit->add_option("--c-grid", raw.c_grid, "comma separated c values")->delimiter(',');
  audit->add_option("--points", raw.points, "uniform grid size");
  add_common(audit, raw);

  auto* sharp = app.add_subcommand("sharpness", "Taylor slope and witness search for the exponent r 2/p");
  add_p_list(sharp, raw);
  sharp->add_option("--r", raw.r, "exponent multiplier r > 0");
  add_common(sharp, raw);

  auto* schatten = app.add_subcommand("schatten", "random positive matrix trials of the trace inequality");
  add_p_list(schatten, raw);
  schatten->add_option("--dim", raw.dims, "comma separated dimensions")->delimiter(',');
  schatten->add_option("--trials", raw.trials, "trials per (p, dim)");
  schatten->add_flag("--conjectural", raw.conjectural, "also evaluate exponents that are not powers of two");
  add_common(schatten, raw);

  auto* means = app.add_subcommand("means", "power-mean form and AGM chain over an alpha grid");
  add_grid(means, raw);
  add_p_list(means, raw);
  add_common(means, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CLI::App* sub = app.get_subcommands().front();
  CommandConfig cfg;
  const std::string name = sub->get_name();
  if (name == "contour") cfg.command = Command::contour;
  if (name == "verify") cfg.command = Command::verify;
  if (name == "audit") cfg.command = Command::audit;
  if (name == "sharpness") cfg.command = Command::sharpness;
  if (name == "schatten") cfg.command = Command::schatten;
  if (name == "means") cfg.command = Command::means;

  auto has = [sub](const char* opt) { return sub->get_option_no_throw(opt) != nullptr && sub->count(opt) > 0; };
  if (has("--alpha-min")) cfg.alpha_min = raw.alpha_min;
  if (has("--alpha-max")) cfg.alpha_max = raw.alpha_max;
  if (has("--p-min")) cfg.p_min = raw.p_min;
  if (has("--p-max")) cfg.p_max = raw.p_max;
  if (has("--na")) cfg.na = raw.na;
  if (has("--np")) cfg.np = raw.np;
  if (has("--trials")) cfg.trials = raw.trials;
  if (has("--points")) cfg.points = raw.points;
  if (has("--r")) cfg.r = raw.r;
  if (has("--out")) cfg.out_path = raw.out;
  if (has("--c")) cfg.c_values.push_back(raw.c);
  for (double c : raw.c_grid) cfg.c_values.push_back(c);
  cfg.p_list = raw.p_list;
  cfg.dims = raw.dims;
  cfg.seed = raw.seed;
  cfg.conjectural = raw.conjectural;

  if (has("--format")) {
    cfg.format = raw.format == "csv" ? Format::csv : Format::json;
    if (cfg.format == Format::csv && cfg.command != Command::contour) {
      throw UsageError(std::string(to_string(cfg.command)) + " only writes json");
    }
  } else {
    cfg.format = cfg.command == Command::contour ? Format::csv : Format::json;
  }
  cfg.precision = precision_from_env();
  return cfg;
}

}  // namespace sharplp::cli
