#include "sharplp/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sharplp/proof_audit.hpp"

namespace sharplp {

UnoReport uno_sides(const SimpleFunction& alpha, const MeasureSpace& prob_space, double p) {
  require(alpha.size() == prob_space.size(), Errc::MisalignedFunction, "alpha and the space must have equal length");
  require(p != 0, Errc::ZeroExponent, "p = 0 is excluded");
  std::vector<double> comp(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    require(alpha[i] >= 0 && alpha[i] <= 1, Errc::OutOfRangeAlpha, "alpha must lie in [0, 1]");
    comp[i] = 1 - alpha[i];
  }
  const SimpleFunction beta(std::move(comp));
  const double s = lp_functional(alpha, prob_space, p) + lp_functional(beta, prob_space, p);
  const double ov = overlap_norm(alpha, beta, prob_space, p);
  const double gt = ov * std::exp(-2 / p * std::log(s / 2));

  UnoReport rep;
  rep.rhs = std::exp((p - 1) * std::log1p(gt)) * s;
  rep.slack = forward_direction(region_of(p)) ? rep.rhs - rep.lhs : rep.lhs - rep.rhs;
  rep.satisfied = detail::within_slack(rep.slack, rep.lhs, rep.rhs);
  return rep;
}

const char* to_string(EqualityKind k) noexcept {
  switch (k) {
    case EqualityKind::DisjointSupport: return "DisjointSupport";
    case EqualityKind::EqualFunctions: return "EqualFunctions";
    case EqualityKind::MaxRatioConstant: return "MaxRatioConstant";
    case EqualityKind::None: return "None";
  }
  return "None";
}

EqualityCase detect_equality_case(const SimpleFunction& f, const SimpleFunction& g, const MeasureSpace& space,
                                  double tol) {
  require(f.size() == space.size() && g.size() == space.size(), Errc::MisalignedFunction,
          "f, g and the space must have equal length");
  require(f.nonnegative() && g.nonnegative(), Errc::NegativeInput, "f and g must be nonnegative");
  const std::size_t n = f.size();
  bool disjoint = true;
  bool equal = true;
  double lo = 1;
  double hi = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double s = f[i] + g[i];
    require(s > 0, Errc::ZeroSumPoint, "f + g vanishes at point " + std::to_string(i));
    if (f[i] * g[i] > tol * s * s) disjoint = false;
    if (std::abs(f[i] - g[i]) > tol * s) equal = false;
    const double a = f[i] / s;
    const double m = std::max(a, 1 - a);
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  if (disjoint) return {EqualityKind::DisjointSupport, 1.0};
  if (equal) return {EqualityKind::EqualFunctions, 0.5};
  if (hi - lo <= tol) return {EqualityKind::MaxRatioConstant, 0.5 * (lo + hi)};
  return {EqualityKind::None, std::nullopt};
}

const char* to_string(JensenDirection d) noexcept {
  switch (d) {
    case JensenDirection::MeanAtLeast: return "MeanAtLeast";
    case JensenDirection::MeanAtMost: return "MeanAtMost";
    case JensenDirection::Equality: return "Equality";
  }
  return "Equality";
}

JensenReport jensen_audit(const SimpleFunction& alpha, const MeasureSpace& prob_space, double p) {
  require(alpha.size() == prob_space.size(), Errc::MisalignedFunction, "alpha and the space must have equal length");
  require(p != 0 && p != 1 && p != 2, Errc::ExponentOutOfRange, "the Jensen step needs p not in {0, 1, 2}");
  require(std::abs(prob_space.total_mass() - 1) <= 1e-12, Errc::NotProbabilitySpace, "weights must sum to 1");

  JensenReport rep;
  double b_lo = std::numeric_limits<double>::infinity();
  double b_hi = -b_lo;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const double a = alpha[i];
    require(a >= 0 && a <= 1, Errc::OutOfRangeAlpha, "alpha must lie in [0, 1]");
    require(p > 0 || (a > 0 && a < 1), Errc::OutOfRangeAlpha, "negative p needs alpha strictly inside (0, 1)");
    const double b = b_of_a(a, p);
    rep.B += prob_space[i] * b;
    rep.mean_H += prob_space[i] * h_of_a(a, p);
    b_lo = std::min(b_lo, b);
    b_hi = std::max(b_hi, b);
  }
  rep.H_of_B = H_of_b(rep.B, p);

  const double scale = std::max(std::abs(rep.mean_H), std::abs(rep.H_of_B));
  const double tol = 1e-10 * scale;
  if (b_hi - b_lo <= 1e-14 * std::max(1.0, b_hi)) {
    rep.direction_expected = JensenDirection::Equality;
    rep.satisfied = std::abs(rep.mean_H - rep.H_of_B) <= tol;
  } else if (p > 2) {
    rep.direction_expected = JensenDirection::MeanAtLeast;
    rep.satisfied = rep.mean_H >= rep.H_of_B - tol;
  } else {
    rep.direction_expected = JensenDirection::MeanAtMost;
    rep.satisfied = rep.mean_H <= rep.H_of_B + tol;
  }
  return rep;
}

}  // namespace sharplp
