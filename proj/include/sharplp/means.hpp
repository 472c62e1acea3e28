#pragma once

// Two-point power means, the constant-case factor of the sharpened triangle
// inequality, and the one-variable reformulations used to probe the exponent.

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <type_traits>

#include "sharplp/errors.hpp"
#include "sharplp/real.hpp"

namespace sharplp {

/// M_q(x, y) = ((x^q + y^q)/2)^(1/q), M_0 = sqrt(xy). Evaluated as
/// sqrt(xy) exp(log cosh(d) / q) with d = q log(x/y) / 2, which stays accurate
/// both as q -> 0 and for large |q|.
template <class Real>
Real power_mean(const Real& x, const std::type_identity_t<Real>& y, const std::type_identity_t<Real>& q) {
  using std::abs;
  using std::exp;
  using std::log;
  using std::sinh;
  using std::sqrt;
  require(x > 0 && y > 0, Errc::NonpositiveArgument, "power means need x, y > 0");
  if (q == 0) return sqrt(Real(x * y));
  const Real lx = log(x);
  const Real ly = log(y);
  const Real d = abs(Real(q * (lx - ly) / 2));
  Real log_cosh;
  if (d < 1) {
    const Real s = sinh(Real(d / 2));
    log_cosh = log1p_real(Real(2 * s * s));
  } else {
    log_cosh = d + log1p_real(Real(exp(Real(-2 * d)))) - log(Real(2));
  }
  return exp(Real((lx + ly) / 2 + log_cosh / q));
}

/// The constant-case factor
///   (1 + R^q)^(p-1) (a^p + (1-a)^p),   R = 2 a^(p/2) (1-a)^(p/2) / (a^p + (1-a)^p),
/// evaluated in log-domain. With q = 2/p this is the right side of the
/// inequality for numbers; it is >= 1 for p in (0,1] u [2,inf) and <= 1 otherwise.
/// At a in {0, 1} and p > 0 the value is the continuous limit 1.
template <class Real>
Real constant_factor(const Real& alpha, const std::type_identity_t<Real>& p,
                     const std::type_identity_t<Real>& q_exponent) {
  using std::exp;
  using std::log;
  require(p != 0, Errc::ZeroExponent, "constant factor needs p != 0");
  require(alpha >= 0 && alpha <= 1, Errc::OutOfDomain, "alpha must lie in [0, 1]");
  if (alpha == 0 || alpha == 1) {
    require(p > 0, Errc::EndpointWithNegativeP, "alpha in {0, 1} needs p > 0");
    return Real(1);
  }
  if (p == 1) return Real(1);
  const Real la = log(alpha);
  const Real lb = log(Real(1 - alpha));
  const Real log_b = log_add_exp(Real(p * la), Real(p * lb));
  const Real log_r = log(Real(2)) + p / 2 * (la + lb) - log_b;
  const Real r_pow = exp(q_exponent * log_r);
  return exp((p - 1) * log1p_real(r_pow) + log_b);
}

template <class Real>
Real constant_factor(const Real& alpha, const std::type_identity_t<Real>& p) {
  return constant_factor<Real>(alpha, p, Real(2 / p));
}

/// The ratio R of the constant case, in [0, 1].
double overlap_ratio(double alpha, double p);

struct AGMChain {
  double A = 0;
  double G = 0;
  double Mp = 0;
  double Mp_dual = 0;
  double p_dual = 0;
  /// 1-(A/Mp)^p', (1-(G/Mp)^2)/2, (1-(G/Mp')^2)/2, 1-(A/Mp')^p.
  std::array<double, 4> terms{};

  bool ordered(double tol = 1e-12) const;
};

/// The improved AGM chain for x, y > 0 and p > 2.
AGMChain agm_chain(double x, double y, double p);

struct QMeansSides {
  double lhs;  // M_1^p
  double rhs;  // ((M_p + M_-p)/2)^(p-1) M_p
  bool forward;  // lhs <= rhs is the claim
  bool satisfied;
};

/// Both sides of the power-mean restatement; p != 0.
QMeansSides qmeans_sides(double x, double y, double p, double rel_slack = 1e-12);

struct EtaValues {
  double eta;
  double f_p_s;
};

/// eta(s) = ((1+sqrt s)^p + (1-sqrt s)^p)/2 and
/// f_p(s) = eta^(1/(p-1)) + (1-s) eta^((2-p)/(p(p-1))) - 2, with the explicit
/// p = 1 limit used whenever |p - 1| <= 1e-6.
EtaValues eta_family(double s, double p);

double eta(double s, double p);

/// g_{r,p}(s) = eta^(1/(p-1)) (1 + ((1-s)/eta^(2/p))^r) - 2.
double g_rp(double s, double r, double p);

struct SharpnessResult {
  double p = 0;
  double r = 0;
  double slope_predicted = 0;
  double slope_measured = 0;
  /// Scan point with the largest violation of the claimed sign of g_{r,p}.
  std::optional<double> witness_s;
  std::optional<double> witness_value;
  /// Bisected outer edge of the violating interval inside (0, 0.1], if it ends there.
  std::optional<double> violation_edge;
  /// +1 when the theorem claims g_{r,p} >= 0, -1 when it claims <= 0.
  int claimed_sign = 0;
};

/// True exactly for the (p, r) combinations where the exponent r(2/p) is too
/// strong and the claimed sign of g_{r,p} must fail near s = 0.
bool sharpness_witness_expected(double p, double r);

SharpnessResult sharpness_probe(double p, double r);

}  // namespace sharplp
