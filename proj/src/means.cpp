#include "sharplp/means.hpp"

#include <cmath>
#include <vector>

namespace sharplp {

double overlap_ratio(double alpha, double p) {
  require(p != 0, Errc::ZeroExponent, "ratio needs p != 0");
  require(alpha >= 0 && alpha <= 1, Errc::OutOfDomain, "alpha must lie in [0, 1]");
  if (alpha == 0 || alpha == 1) {
    require(p > 0, Errc::EndpointWithNegativeP, "alpha in {0, 1} needs p > 0");
    return 0.0;
  }
  const double la = std::log(alpha);
  const double lb = std::log1p(-alpha);
  const double log_b = log_add_exp(p * la, p * lb);
  return std::exp(std::log(2.0) + p / 2 * (la + lb) - log_b);
}

bool AGMChain::ordered(double tol) const {
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    if (terms[i] < terms[i + 1] - tol) return false;
  }
  for (double t : terms) {
    if (t < -tol) return false;
  }
  return true;
}

AGMChain agm_chain(double x, double y, double p) {
  require(x > 0 && y > 0, Errc::NonpositiveArgument, "AGM chain needs x, y > 0");
  require(p > 2, Errc::ExponentOutOfRange, "AGM chain needs p > 2");
  AGMChain c;
  c.p_dual = p / (p - 1);
  c.A = (x + y) / 2;
  c.G = std::sqrt(x * y);
  c.Mp = power_mean(x, y, p);
  c.Mp_dual = power_mean(x, y, c.p_dual);
  c.terms = {
      1 - std::pow(c.A / c.Mp, c.p_dual),
      0.5 * (1 - (c.G / c.Mp) * (c.G / c.Mp)),
      0.5 * (1 - (c.G / c.Mp_dual) * (c.G / c.Mp_dual)),
      1 - std::pow(c.A / c.Mp_dual, p),
  };
  return c;
}

QMeansSides qmeans_sides(double x, double y, double p, double rel_slack) {
  require(p != 0, Errc::ZeroExponent, "qmeans needs p != 0");
  const double m1 = power_mean(x, y, 1.0);
  const double mp = power_mean(x, y, p);
  const double mneg = power_mean(x, y, -p);
  QMeansSides s;
  s.lhs = std::pow(m1, p);
  s.rhs = std::pow((mp + mneg) / 2, p - 1) * mp;
  s.forward = (p > 0 && p <= 1) || p >= 2;
  const double scale = std::max(std::abs(s.lhs), std::abs(s.rhs));
  s.satisfied = s.forward ? s.lhs <= s.rhs + rel_slack * scale : s.lhs >= s.rhs - rel_slack * scale;
  return s;
}

double eta(double s, double p) {
  require(s >= 0 && s < 1, Errc::OutOfDomain, "s must lie in [0, 1)");
  require(p != 0, Errc::OutOfDomain, "eta needs p != 0");
  const double r = std::sqrt(s);
  return (std::pow(1 + r, p) + std::pow(1 - r, p)) / 2;
}

namespace {

double f_one(double s) {
  const double r = std::sqrt(s);
  // (1-r)^((1-r)/2) -> 1 as r -> 1.
  const double lo = r < 1 ? (1 - r) / 2 * std::log1p(-r) : 0.0;
  const double hi = (1 + r) / 2 * std::log1p(r);
  return (2 - s) * std::exp(lo + hi) - 2;
}

}  // namespace

EtaValues eta_family(double s, double p) {
  const double e = eta(s, p);
  if (std::abs(p - 1) <= 1e-6) return {e, f_one(s)};
  const double le = std::log(e);
  const double value = std::exp(le / (p - 1)) + (1 - s) * std::exp(le * (2 - p) / (p * (p - 1))) - 2;
  return {e, value};
}

double g_rp(double s, double r, double p) {
  require(r > 0, Errc::OutOfDomain, "g_rp needs r > 0");
  require(p != 0 && p != 1, Errc::ExponentOutOfRange, "g_rp needs p not in {0, 1}");
  const double le = std::log(eta(s, p));
  const double base = std::log1p(-s) - 2 / p * le;
  return std::exp(le / (p - 1)) * (1 + std::exp(r * base)) - 2;
}

bool sharpness_witness_expected(double p, double r) {
  if (p > 2 && r > 1) return true;
  if (p < 0 && r < 1) return true;
  if (p > 0 && p < 2 && p != 1 && r < 1) return true;
  return false;
}

SharpnessResult sharpness_probe(double p, double r) {
  require(p != 0 && p != 1 && p != 2, Errc::ExponentOutOfRange, "sharpness probe needs p not in {0, 1, 2}");
  require(r > 0, Errc::OutOfDomain, "sharpness probe needs r > 0");

  SharpnessResult res;
  res.p = p;
  res.r = r;
  res.slope_predicted = p * (1 - r);
  res.claimed_sign = (p > 2 || p < 0) ? 1 : -1;

  // Richardson on the forward difference: D(h) = slope + C h + O(h^2).
  const double g0 = g_rp(0.0, r, p);
  auto diff = [&](double h) { return (g_rp(h, r, p) - g0) / h; };
  const double h = 1e-6;
  res.slope_measured = 2 * diff(h / 2) - diff(h);

  constexpr int kScanPoints = 200;
  constexpr double kLo = 1e-8;
  constexpr double kHi = 0.1;
  constexpr double kViolation = 1e-12;
  auto violates = [&](double s) {
    const double v = g_rp(s, r, p);
    return res.claimed_sign > 0 ? v < -kViolation : v > kViolation;
  };

  std::vector<double> grid(kScanPoints);
  for (int i = 0; i < kScanPoints; ++i) {
    grid[i] = kLo * std::pow(kHi / kLo, static_cast<double>(i) / (kScanPoints - 1));
  }
  double worst = 0;
  int last_violating = -1;
  for (int i = 0; i < kScanPoints; ++i) {
    const double v = g_rp(grid[i], r, p);
    const double excess = -res.claimed_sign * v;
    if (excess > kViolation) {
      last_violating = i;
      if (excess > worst) {
        worst = excess;
        res.witness_s = grid[i];
        res.witness_value = v;
      }
    }
  }
  if (last_violating >= 0 && last_violating + 1 < kScanPoints) {
    double lo = grid[last_violating];
    double hi = grid[last_violating + 1];
    while (hi - lo > 1e-12 * hi) {
      const double mid = 0.5 * (lo + hi);
      (violates(mid) ? lo : hi) = mid;
    }
    res.violation_edge = lo;
  }
  return res;
}

}  // namespace sharplp
