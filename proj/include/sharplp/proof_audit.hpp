#pragma once

// Numerical audit of the two reductions behind the sharpened triangle
// inequality: convexity of H(b) through the hyperbolic parametrisation, and
// the single-sign-change chain f' -> g -> h -> v -> v'' in the variable
// t = ((1-a)/a)^p with c = 1/p.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sharplp/real.hpp"

namespace sharplp {

// ---------------------------------------------------------------------------
// H(b) = h(a(b)), with b(a) = a^p + (1-a)^p and h(a) = (a(1-a))^(p/2).

double b_of_a(double a, double p);
double h_of_a(double a, double p);

/// The unique a in [1/2, 1) with b(a) = b_target, by monotone bisection.
/// b_target = 1 maps to a = 1 when p > 0 (the disjoint-support endpoint).
double invert_b(double b_target, double p);

/// H(b) through invert_b.
double H_of_b(double b, double p);

struct HyperbolicPoint {
  double x = 0;
  double a = 0;
  double b = 0;
  double h = 0;
  double db_dx = 0;
  double dh_dx = 0;
  // The quotients below are singular at x = 0 and left unset there.
  std::optional<double> dH_db;
  std::optional<double> ddx_dH_db;
  std::optional<double> d2H_db2;
};

/// Point of the parametrisation e^(2x) = a/(1-a), x >= 0, p != 1.
HyperbolicPoint hyperbolic_point(double x, double p);

/// Limit of dH/db as x -> 0+: -1/(2(p-1)).
double dH_db_at_zero(double p);

/// t tanh(x) - tanh(t x).
double tanh_gap(double t, double x);

// ---------------------------------------------------------------------------
// The chain of auxiliary functions on t in (0, 1].

enum class ChainFunction {
  f,
  f_prime,
  g,
  h,
  h0,
  v,
  v_prime,
  v_dprime,
  v_tprime,
  w,
  p_quad,
  m,
  u,
  b_factor,
  q_factor,
};

std::string_view to_string(ChainFunction fn) noexcept;
std::optional<ChainFunction> chain_function_from_string(std::string_view name);

struct ChainContext {
  double p;
  double c;
  double delta = 1e-6;

  static ChainContext from_c(double c, double delta = 1e-6);
  static ChainContext from_p(double p, double delta = 1e-6);
};

/// Value of a chain function at c and t. Instantiated for double and QuadReal.
/// t = 1 returns the removable-singularity limit (0) for f', g and h.
template <class Real>
Real chain_value(ChainFunction fn, const Real& c, const Real& t);

/// chain_value evaluated in quad precision and rounded to double.
double chain_eval(ChainFunction fn, const ChainContext& ctx, double t);

/// (1-c)(t^c+1)(1-t)/(t^c-t), the quantity shown to exceed 1 for c != 1.
double fraction_lemma_value(double c, double t);

/// Closed form of q = v''/(2c) at c = 2.
double q_factor_c2(double t);

// ---------------------------------------------------------------------------
// Sign-change detection.

enum class Pattern { Positive, Negative, PlusToMinus, MinusToPlus, Other };

std::string_view to_string(Pattern p) noexcept;

struct Crossing {
  double bracket_lo;
  double bracket_hi;
  int sign_before;
  int sign_after;
};

struct SignChangePattern {
  std::vector<Crossing> crossings;
  Pattern overall = Pattern::Other;
};

struct ScanOptions {
  std::size_t grid_size = 10000;
  /// Samples with |value| <= zero_rel * (max |value| over the 5 nearest samples
  /// whose t is within a factor 2) count as zero.
  double zero_rel = 1e-13;
  double bracket_width = 1e-10;
  /// Extra log-spaced samples on [log_floor, lo) ahead of the uniform grid; 0 disables.
  std::size_t log_points = 0;
  double log_floor = 1e-40;
  /// Known sign of the limit at the left end (t -> 0+), used as a virtual first sample.
  std::optional<int> left_limit_sign;
};

using QuadFunction = std::function<QuadReal(const QuadReal&)>;

/// Scans [lo, hi] on a uniform grid, bisects every bracketed crossing and
/// classifies the overall pattern.
SignChangePattern scan_sign_changes(const QuadFunction& fn, double lo, double hi, const ScanOptions& opts);

SignChangePattern scan_sign_changes(const std::function<double(double)>& fn, double lo, double hi,
                                    const ScanOptions& opts);

/// Sign of the t -> 0+ limit of a chain function, from its known asymptotics.
std::optional<int> chain_left_limit_sign(ChainFunction fn, double c);

/// Scans a chain function over (delta, 1 - delta) plus a log-spaced approach
/// to t = 0, anchored by the known sign of the t -> 0+ limit.
SignChangePattern sign_changes(ChainFunction fn, const ChainContext& ctx, std::size_t grid_size);

/// Pattern the proof asserts for fn at c, if it asserts one.
std::optional<Pattern> expected_pattern(ChainFunction fn, double c);

struct FunctionAudit {
  ChainFunction function;
  SignChangePattern observed;
  Pattern expected;
  bool match;
  std::string scope;
};

struct EndpointIdentities {
  double v_at_1;
  double v_prime_at_1;
  double v_dprime_at_1;
  double v_tprime_at_1;
  double v_tprime_expected;
  double h_at_1;
  double w_at_1;
  double w_expected;
  bool holds;
};

struct ChainReport {
  double c;
  double p;
  std::size_t grid_size;
  /// f', g, h, v, v'' against their asserted patterns.
  std::vector<FunctionAudit> audited;
  /// Case-scoped claims (w, p, m, u, b) where the proof makes them.
  std::vector<FunctionAudit> informational;
  bool fraction_lemma_holds;
  EndpointIdentities endpoints;

  bool all_match() const;
};

/// Audits the chain at ctx.c; c must avoid {0, 1/2, 1}.
ChainReport audit_chain(const ChainContext& ctx, std::size_t grid_size);

}  // namespace sharplp
