#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "commands.hpp"
#include "sharplp/inequality.hpp"

namespace sharplp::cli {

namespace {

const std::vector<double> kDefaultPList{0.3, 0.7, 2.5, 3, 4.5, 9, -3, -0.7, 1.2, 1.8};

struct Instance {
  SimpleFunction f;
  SimpleFunction g;
  MeasureSpace space;
};

// One generator per (seed, exponent index, trial) so that instances do not
// depend on how many trials ran before them.
std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t p_index, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(p_index), static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

// (0, 2], built from the raw 64-bit stream so the values do not depend on
// the standard library's distribution implementation.
double draw(std::mt19937_64& rng) { return 2.0 - 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Instance random_instance(std::mt19937_64& rng, int max_points) {
  const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_points));
  std::vector<double> f(n), g(n), w(n);
  for (int i = 0; i < n; ++i) {
    f[i] = draw(rng);
    g[i] = draw(rng);
    w[i] = draw(rng);
  }
  return {SimpleFunction(std::move(f)), SimpleFunction(std::move(g)), MeasureSpace(std::move(w))};
}

InequalityReport sides(const Instance& in, double p, Precision precision) {
  if (precision == Precision::High) {
    return main_sides<HighReal>(in.f.rebind<HighReal>(), in.g.rebind<HighReal>(), in.space.rebind<HighReal>(),
                                HighReal(p));
  }
  return main_sides(in.f, in.g, in.space, p);
}

bool equality_reproduced(const InequalityReport& r) {
  return std::abs(r.lhs - r.rhs) <= 1e-9 * std::max(std::abs(r.lhs), std::abs(r.rhs));
}

}  // namespace

CommandOutput run_verify(const CommandConfig& cfg) {
  const std::vector<double> ps = cfg.p_list.empty() ? kDefaultPList : cfg.p_list;
  const int trials = cfg.trials.value_or(2000);
  const int points = cfg.points.value_or(12);
  if (trials < 1) throw UsageError("--trials must be >= 1");
  if (points < 1) throw UsageError("--points must be >= 1");
  for (double p : ps) check_exponent(p);

  std::map<std::string, int> region_failures;
  for (const char* name : {"Forward", "Reverse", "BoundaryP1", "BoundaryP2"}) region_failures[name] = 0;
  double max_violation = 0;
  int dominance_failures = 0;
  int equality_failures = 0;
  Json per_p = Json::array();

  for (std::size_t pi = 0; pi < ps.size(); ++pi) {
    const double p = ps[pi];
    const Region region = region_of(p);
    int failures = 0;
    int dom_checked = 0;
    int dom_failures = 0;
    int eq_checked = 0;
    int eq_failures = 0;
    double worst = 0;

    for (int t = 0; t < trials; ++t) {
      std::mt19937_64 rng = trial_rng(cfg.seed, pi, t);
      const Instance in = random_instance(rng, points);
      const InequalityReport r = sides(in, p, cfg.precision);
      const double scale = std::max(std::abs(r.lhs), std::abs(r.rhs));
      worst = std::max(worst, -r.slack / scale);
      if (!r.satisfied) ++failures;
      if (p >= 2 && r.carbery_rhs) {
        ++dom_checked;
        if (!(r.rhs <= *r.carbery_rhs * (1 + 1e-12))) ++dom_failures;
      }
    }

    // Equality instances: f = g always, disjoint supports where zeros are admissible.
    for (int t = 0; t < std::max(1, trials / 100); ++t) {
      std::mt19937_64 rng = trial_rng(cfg.seed, pi, trials + t);
      const Instance in = random_instance(rng, points);
      ++eq_checked;
      if (!equality_reproduced(sides({in.f, in.f, in.space}, p, cfg.precision))) ++eq_failures;
      if (p > 0 && region != Region::Reverse) {
        std::vector<double> fd(in.f.size()), gd(in.f.size());
        for (std::size_t i = 0; i < fd.size(); ++i) (i % 2 == 0 ? fd[i] : gd[i]) = in.f[i];
        if (fd.size() == 1) gd[0] = 0;
        ++eq_checked;
        const InequalityReport r = sides({SimpleFunction(fd), SimpleFunction(gd), in.space}, p, cfg.precision);
        if (!equality_reproduced(r)) ++eq_failures;
      }
    }

    region_failures[to_string(region)] += failures;
    max_violation = std::max(max_violation, worst);
    dominance_failures += dom_failures;
    equality_failures += eq_failures;
    Json e;
    e["p"] = p;
    e["region"] = to_string(region);
    e["instances"] = trials;
    e["failures"] = failures;
    e["max_violation"] = std::max(0.0, worst);
    e["dominance_checked"] = dom_checked;
    e["dominance_failures"] = dom_failures;
    e["equality_checked"] = eq_checked;
    e["equality_failures"] = eq_failures;
    per_p.push_back(std::move(e));
  }

  int total_failures = 0;
  for (const auto& [name, n] : region_failures) total_failures += n;
  CommandOutput out;
  out.passed = total_failures == 0 && dominance_failures == 0 && equality_failures == 0;

  Json j;
  j["seed"] = cfg.seed;
  j["trials"] = trials;
  j["points"] = points;
  j["precision"] = cfg.precision == Precision::High ? "high" : "double";
  j["p_list"] = ps;
  j["per_region_failures"] = {{"Forward", region_failures["Forward"]},
                              {"Reverse", region_failures["Reverse"]},
                              {"BoundaryP1", region_failures["BoundaryP1"]},
                              {"BoundaryP2", region_failures["BoundaryP2"]}};
  j["max_violation"] = max_violation;
  j["dominance_failures"] = dominance_failures;
  j["equality_failures"] = equality_failures;
  j["per_p"] = std::move(per_p);
  j["passed"] = out.passed;
  out.text = dump(j);
  return out;
}

}  // namespace sharplp::cli
