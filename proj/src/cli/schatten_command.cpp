#include <algorithm>
#include <cmath>
#include <random>

#include "commands.hpp"
#include "sharplp/schatten.hpp"

namespace sharplp::cli {

namespace {

// Matrix seeds for (case, trial); two consecutive draws give A and B.
std::pair<std::uint64_t, std::uint64_t> matrix_seeds(std::uint64_t seed, std::size_t p_index, int dim, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(p_index), static_cast<std::uint32_t>(dim),
                    static_cast<std::uint32_t>(trial)};
  std::mt19937_64 rng(seq);
  const std::uint64_t a = rng();
  return {a, rng()};
}

}  // namespace

CommandOutput run_schatten(const CommandConfig& cfg) {
  const std::vector<double> ps = cfg.p_list.empty() ? std::vector<double>{2, 4, 8, 16} : cfg.p_list;
  const std::vector<int> dims = cfg.dims.empty() ? std::vector<int>{2, 3, 4, 5, 6} : cfg.dims;
  const int trials = cfg.trials.value_or(500);
  if (trials < 1) throw UsageError("--trials must be >= 1");
  for (double p : ps) {
    if (!is_power_of_two_exponent(p) && !(cfg.conjectural && p >= 1)) {
      throw UsageError("p = " + format_number(p) + " is not a power of two (use --conjectural to explore)");
    }
  }
  for (int d : dims) {
    if (d < 1 || d > 64) throw UsageError("--dim values must lie in [1, 64]");
  }

  CommandOutput out;
  Json cases = Json::array();
  int total_failures = 0;
  for (std::size_t pi = 0; pi < ps.size(); ++pi) {
    const double p = ps[pi];
    const bool conjectural = !is_power_of_two_exponent(p);
    for (int dim : dims) {
      int failures = 0;
      int lt_failures = 0;
      int identity_failures = 0;
      double worst = 0;
      for (int t = 0; t < trials; ++t) {
        const auto [sa, sb] = matrix_seeds(cfg.seed, pi, dim, t);
        const PSDMatrix a = random_psd(dim, sa);
        const PSDMatrix b = random_psd(dim, sb);
        const SchattenReport r = schatten_verify(a, b, p, cfg.conjectural);
        worst = std::max(worst, -r.slack / std::max(r.lhs, r.rhs));
        if (!r.satisfied) ++failures;
        if (p == 2 && std::abs(r.lhs - r.rhs) > 1e-12 * r.lhs) ++identity_failures;
        if (!lieb_thirring_check(a, b, p).holds) ++lt_failures;
      }
      if (!conjectural) total_failures += failures + lt_failures + identity_failures;
      Json e;
      e["p"] = p;
      e["dim"] = dim;
      e["trials"] = trials;
      e["conjectural"] = conjectural;
      e["failures"] = failures;
      e["lieb_thirring_failures"] = lt_failures;
      e["identity_failures"] = identity_failures;
      e["max_violation"] = std::max(0.0, worst);
      cases.push_back(std::move(e));
    }
  }
  out.passed = total_failures == 0;
  Json j;
  j["seed"] = cfg.seed;
  j["trials"] = trials;
  j["cases"] = std::move(cases);
  j["failures"] = total_failures;
  j["passed"] = out.passed;
  out.text = dump(j);
  return out;
}

}  // namespace sharplp::cli
