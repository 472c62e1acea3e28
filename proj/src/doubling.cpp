#include "sharplp/doubling.hpp"

#include <algorithm>
#include <cmath>

#include "sharplp/inequality.hpp"

namespace sharplp {

double psi(double t, double alpha) {
  return std::pow(1 + alpha, 1 + t) - std::pow(1 + alpha * alpha, t) - std::pow(2.0, t) * alpha;
}

double p4_scalar_gap(double alpha) {
  return std::pow(1 + alpha, 1.5) - std::sqrt(2.0) * alpha - std::sqrt(1 + alpha * alpha);
}

ChainLink make_link(std::string name, double lhs, double rhs, bool reversed) {
  ChainLink l;
  l.name = std::move(name);
  l.lhs = lhs;
  l.rhs = rhs;
  l.reversed = reversed;
  l.slack = reversed ? lhs - rhs : rhs - lhs;
  l.holds = l.slack >= -kInequalitySlack * std::max(std::abs(lhs), std::abs(rhs));
  return l;
}

namespace {

SimpleFunction squared(const SimpleFunction& f) { return f * f; }

}  // namespace

P4Report direct_p4(const SimpleFunction& f, const SimpleFunction& g, const MeasureSpace& space) {
  require(f.size() == space.size() && g.size() == space.size(), Errc::MisalignedFunction,
          "f, g and the space must have equal length");
  require(f.nonnegative() && g.nonnegative(), Errc::NegativeInput, "f and g must be nonnegative");
  const double s = lp_functional(f, space, 4.0) + lp_functional(g, space, 4.0);
  require(s > 0, Errc::ZeroPair, "f and g both vanish");

  P4Report rep;
  rep.scale = std::pow(2 / s, 0.25);
  const SimpleFunction fs = rep.scale * f;
  const SimpleFunction gs = rep.scale * g;
  const SimpleFunction x = fs * gs;
  const SimpleFunction y = squared(fs) + squared(gs);

  rep.alpha = lp_norm(x, space, 2.0);
  rep.beta = lp_norm(y, space, 2.0);
  rep.lhs = std::sqrt(lp_functional(fs + gs, space, 4.0));
  rep.bound_minkowski = rep.beta + 2 * rep.alpha;
  rep.bound_final = std::sqrt(2.0) * std::pow(1 + rep.alpha, 1.5);
  rep.identity_gap = rep.beta * rep.beta - 2 - 2 * rep.alpha * rep.alpha;
  rep.scalar_gap = p4_scalar_gap(rep.alpha);

  rep.links.push_back(make_link("minkowski", rep.lhs, rep.bound_minkowski));
  rep.links.push_back(make_link("final", rep.bound_minkowski, rep.bound_final));
  rep.links.push_back(make_link("scalar", std::sqrt(1 + rep.alpha * rep.alpha),
                                std::pow(1 + rep.alpha, 1.5) - std::sqrt(2.0) * rep.alpha));
  rep.identity_holds = std::abs(rep.identity_gap) <= 1e-12 * std::max(1.0, rep.beta * rep.beta);
  rep.all_hold = rep.identity_holds && rep.alpha <= 1 + 1e-12 &&
                 std::all_of(rep.links.begin(), rep.links.end(), [](const ChainLink& l) { return l.holds; });
  return rep;
}

DoublingReport doubling_step(const SimpleFunction& f, const SimpleFunction& g, const MeasureSpace& space, double p) {
  require(p >= 2 || p < 0, Errc::ExponentOutOfRange, "the doubling step covers p >= 2 and p < 0");
  require(f.size() == space.size() && g.size() == space.size(), Errc::MisalignedFunction,
          "f, g and the space must have equal length");
  require(f.nonnegative() && g.nonnegative(), Errc::NegativeInput, "f and g must be nonnegative");
  if (p < 0) {
    require(f.strictly_positive() && g.strictly_positive(), Errc::NonpositiveValueForNegativeP,
            "negative exponents need strictly positive f and g");
  }
  const double q = 2 * p;
  const double s = lp_functional(f, space, q) + lp_functional(g, space, q);
  require(s > 0, Errc::ZeroPair, "f and g both vanish");

  DoublingReport rep;
  rep.p = p;
  rep.scale = std::exp(std::log(2 / s) / q);
  const SimpleFunction fs = rep.scale * f;
  const SimpleFunction gs = rep.scale * g;
  const SimpleFunction x = fs * gs;
  const SimpleFunction f2 = squared(fs);
  const SimpleFunction g2 = squared(gs);
  const SimpleFunction y = f2 + g2;

  rep.gamma = lp_norm(x, space, p);
  rep.beta = lp_norm(y, space, p);
  rep.lhs = std::pow(lp_norm(fs + gs, space, q), 2);
  const double two_root = std::pow(2.0, 1 / p);
  const double level_p = two_root * std::pow(1 + rep.gamma * rep.gamma, 1 - 1 / p);
  rep.final_bound = two_root * std::pow(1 + rep.gamma, 2 - 1 / p);

  const bool reversed = p < 0;
  // ||(f+g)^2||_p = ||Y + 2X||_p against ||Y||_p + 2||X||_p; superadditive for p < 0.
  rep.links.push_back(make_link("minkowski", rep.lhs, rep.beta + 2 * rep.gamma, reversed));
  // The inequality at exponent p on (f^2, g^2), whose overlap term is gamma^2.
  const InequalityReport level = main_sides(f2, g2, space, p);
  ChainLink lvl = make_link("level_p", level.lhs, level.rhs, reversed);
  lvl.holds = level.satisfied;
  lvl.slack = level.slack;
  rep.links.push_back(lvl);
  // 2^(1/p) psi_t(gamma) with t = 1 - 1/p.
  rep.links.push_back(make_link("psi", level_p + 2 * rep.gamma, rep.final_bound, reversed));

  rep.composes = p >= 2;
  rep.all_links_hold = std::all_of(rep.links.begin(), rep.links.end(), [](const ChainLink& l) { return l.holds; });
  rep.conclusion_holds = make_link("conclusion", rep.lhs, rep.final_bound).holds;
  return rep;
}

}  // namespace sharplp
