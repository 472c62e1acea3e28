#pragma once

// Both sides of the sharpened triangle inequality
//   int |f+g|^p <= (1 + G~)^(p-1) int (|f|^p + |g|^p),
//   G~ = ||fg||_{p/2} ((||f||_p^p + ||g||_p^p)/2)^(-2/p),
// and Carbery's variant with G = ||fg||_{p/2} / (||f||_p ||g||_p).
// The direction reverses for p < 0 and 1 < p < 2.

#include <cmath>
#include <optional>

#include "sharplp/measure.hpp"

namespace sharplp {

/// Relative slack applied to every inequality check against max(|lhs|, |rhs|).
inline constexpr double kInequalitySlack = 1e-9;

struct GammaPair {
  double gamma;
  double gamma_tilde;
};

struct InequalityReport {
  double lhs = 0;
  double rhs = 0;
  std::optional<double> carbery_rhs;
  std::optional<double> gamma;
  double gamma_tilde = 0;
  ExponentRegion region{};
  bool satisfied = false;
  /// rhs - lhs where "<=" is claimed, lhs - rhs in the reverse region.
  double slack = 0;
};

namespace detail {

template <class Real>
void check_pair(const BasicSimpleFunction<Real>& f, const BasicSimpleFunction<Real>& g,
                const BasicMeasureSpace<Real>& space, const Real& p) {
  require(f.size() == space.size() && g.size() == space.size(), Errc::MisalignedFunction,
          "f, g and the space must have equal length");
  require(p != 0, Errc::ZeroExponent, "p = 0 is excluded");
  require(f.nonnegative() && g.nonnegative(), Errc::NegativeInput, "f and g must be nonnegative");
  if (p < 0) {
    require(f.strictly_positive() && g.strictly_positive(), Errc::NonpositiveValueForNegativeP,
            "negative exponents need strictly positive f and g");
  }
}

template <class Real>
bool within_slack(const Real& signed_slack, const Real& lhs, const Real& rhs) {
  using std::abs;
  const Real scale = abs(lhs) > abs(rhs) ? Real(abs(lhs)) : Real(abs(rhs));
  return signed_slack >= -Real(kInequalitySlack) * scale;
}

}  // namespace detail

/// (G, G~). Throws ZeroNorm when ||f||_p or ||g||_p vanishes (G is then 0/0).
template <class Real>
GammaPair gamma_pair(const BasicSimpleFunction<Real>& f, const BasicSimpleFunction<Real>& g,
                     const BasicMeasureSpace<Real>& space, const std::type_identity_t<Real>& p) {
  using std::pow;
  detail::check_pair(f, g, space, p);
  const Real sf = lp_functional(f, space, p);
  const Real sg = lp_functional(g, space, p);
  require(sf > 0 && sg > 0, Errc::ZeroNorm, "gamma needs ||f||_p and ||g||_p nonzero");
  const Real ov = overlap_norm(f, g, space, p);
  const Real gamma = ov / (lp_norm(f, space, p) * lp_norm(g, space, p));
  const Real gamma_tilde = ov * pow(Real((sf + sg) / 2), Real(-2 / p));
  return {to_double(gamma), to_double(gamma_tilde)};
}

/// Both sides at exponent p, with the region-aware verdict.
template <class Real>
InequalityReport main_sides(const BasicSimpleFunction<Real>& f, const BasicSimpleFunction<Real>& g,
                            const BasicMeasureSpace<Real>& space, const std::type_identity_t<Real>& p) {
  using std::exp;
  using std::log;
  using std::pow;
  detail::check_pair(f, g, space, p);
  const ExponentRegion region = classify_exponent(to_double(p));
  if (region.region == Region::Reverse && p > 0) {
    require(!f.has_zero() && !g.has_zero(), Errc::ZeroValueInReverseRegion,
            "1 < p < 2 needs f and g positive everywhere");
  }

  const Real sf = lp_functional(f, space, p);
  const Real sg = lp_functional(g, space, p);
  const Real s = sf + sg;
  require(s > 0, Errc::ZeroNorm, "f and g both vanish");

  const Real ov = overlap_norm(f, g, space, p);
  const Real gamma_tilde = ov * exp(Real(-2 / p) * log(Real(s / 2)));
  const Real lhs = lp_functional(f + g, space, p);
  const Real rhs = exp((p - 1) * log1p_real(gamma_tilde)) * s;

  InequalityReport rep;
  rep.lhs = to_double(lhs);
  rep.rhs = to_double(rhs);
  rep.gamma_tilde = to_double(gamma_tilde);
  rep.region = region;
  if (sf > 0 && sg > 0) {
    const Real gamma = ov / (lp_norm(f, space, p) * lp_norm(g, space, p));
    rep.gamma = to_double(gamma);
    rep.carbery_rhs = to_double(Real(exp((p - 1) * log1p_real(gamma)) * s));
  }
  const Real slack = forward_direction(region.region) ? Real(rhs - lhs) : Real(lhs - rhs);
  rep.slack = to_double(slack);
  rep.satisfied = detail::within_slack(slack, lhs, rhs);
  return rep;
}

struct UnoReport {
  double lhs = 1;
  double rhs = 0;
  double slack = 0;
  bool satisfied = false;
};

/// The one-function form on a probability space: 1 against
/// (1 + 2^(2/p) ||a(1-a)||_{p/2} / (||a||_p^p + ||1-a||_p^p)^(2/p))^(p-1) (||a||_p^p + ||1-a||_p^p).
UnoReport uno_sides(const SimpleFunction& alpha, const MeasureSpace& prob_space, double p);

enum class EqualityKind { DisjointSupport, EqualFunctions, MaxRatioConstant, None };

const char* to_string(EqualityKind k) noexcept;

struct EqualityCase {
  EqualityKind kind = EqualityKind::None;
  /// The common value of max{a, 1-a}, a = f/(f+g), when it is constant.
  std::optional<double> constant;
};

/// Checked in order: disjoint support, equal functions, constant max{a, 1-a}.
EqualityCase detect_equality_case(const SimpleFunction& f, const SimpleFunction& g, const MeasureSpace& space,
                                  double tol = 1e-10);

enum class JensenDirection { MeanAtLeast, MeanAtMost, Equality };

const char* to_string(JensenDirection d) noexcept;

struct JensenReport {
  double B = 0;
  double mean_H = 0;
  double H_of_B = 0;
  JensenDirection direction_expected = JensenDirection::Equality;
  bool satisfied = false;
};

/// Jensen step on a probability space: mean of H(b(a)) against H(mean of b(a)).
JensenReport jensen_audit(const SimpleFunction& alpha, const MeasureSpace& prob_space, double p);

}  // namespace sharplp
