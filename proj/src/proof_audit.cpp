#include "sharplp/proof_audit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <utility>

#include "sharplp/errors.hpp"

namespace sharplp {

// ---------------------------------------------------------------------------
// Part B

double b_of_a(double a, double p) {
  require(a >= 0 && a <= 1, Errc::OutOfDomain, "a must lie in [0, 1]");
  if (a == 0 || a == 1) {
    require(p > 0, Errc::EndpointWithNegativeP, "b(a) at a in {0, 1} needs p > 0");
    return 1.0;
  }
  return std::pow(a, p) + std::pow(1 - a, p);
}

double h_of_a(double a, double p) {
  require(a >= 0 && a <= 1, Errc::OutOfDomain, "a must lie in [0, 1]");
  if (a == 0 || a == 1) {
    require(p > 0, Errc::EndpointWithNegativeP, "h(a) at a in {0, 1} needs p > 0");
    return 0.0;
  }
  return std::pow(a * (1 - a), p / 2);
}

double invert_b(double b_target, double p) {
  require(p != 0 && p != 1, Errc::ExponentOutOfRange, "b is not invertible for p in {0, 1}");
  const double b_half = std::pow(2.0, 1 - p);
  const double tol = 1e-14 * std::max(1.0, std::abs(b_target));

  if (p > 0) {
    const double lo_b = std::min(b_half, 1.0);
    const double hi_b = std::max(b_half, 1.0);
    require(b_target >= lo_b - tol && b_target <= hi_b + tol, Errc::TargetOutOfRange,
            "b target outside the range of b on [1/2, 1]");
    if (std::abs(b_target - 1.0) <= tol) return 1.0;
  } else {
    require(b_target >= b_half - tol, Errc::TargetOutOfRange, "b target below b(1/2)");
  }
  if (std::abs(b_target - b_half) <= tol) return 0.5;

  double lo = 0.5;
  double hi;
  if (p > 0) {
    hi = 1.0;
  } else {
    // b -> inf as a -> 1; push the upper end out until it brackets the target.
    hi = 0.75;
    while (b_of_a(hi, p) < b_target) {
      hi = 0.5 * (1 + hi);
      require(hi < 1, Errc::TargetOutOfRange, "b target beyond double resolution");
    }
  }
  const bool increasing = b_of_a(0.75, p) > b_half;
  for (int iter = 0; iter < 400; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double bm = b_of_a(mid, p);
    if (std::abs(bm - b_target) <= tol) return mid;
    if ((bm < b_target) == increasing) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double H_of_b(double b, double p) { return h_of_a(invert_b(b, p), p); }

HyperbolicPoint hyperbolic_point(double x, double p) {
  require(x >= 0, Errc::OutOfDomain, "hyperbolic parameter x must be >= 0");
  require(p != 0 && p != 1, Errc::ExponentOutOfRange, "hyperbolic point needs p not in {0, 1}");
  HyperbolicPoint pt;
  pt.x = x;
  pt.a = 1 / (1 + std::exp(-2 * x));
  const double log_cosh = x + std::log1p(std::exp(-2 * x)) - std::log(2.0);
  pt.h = std::exp(-p * (std::log(2.0) + log_cosh));
  pt.b = 2 * std::cosh(p * x) * pt.h;
  const double u = (p - 1) * x;
  pt.db_dx = p * std::sinh(u) * std::exp((1 - p) * std::log(2.0) - (p + 1) * log_cosh);
  pt.dh_dx = -p * std::tanh(x) * pt.h;
  if (x > 0) {
    pt.dH_db = -std::sinh(x) / (2 * std::sinh(u));
    pt.ddx_dH_db = std::cosh(x) * ((p - 1) * std::tanh(x) - std::tanh(u)) / (2 * std::sinh(u) * std::tanh(u));
    pt.d2H_db2 = *pt.ddx_dH_db / pt.db_dx;
  }
  return pt;
}

double dH_db_at_zero(double p) {
  require(p != 1, Errc::ExponentOutOfRange, "dH/db limit needs p != 1");
  return -1 / (2 * (p - 1));
}

double tanh_gap(double t, double x) { return t * std::tanh(x) - std::tanh(t * x); }

// ---------------------------------------------------------------------------
// Part C chain

namespace {

constexpr std::array<std::pair<ChainFunction, std::string_view>, 15> kChainNames{{
    {ChainFunction::f, "f"},
    {ChainFunction::f_prime, "f_prime"},
    {ChainFunction::g, "g"},
    {ChainFunction::h, "h"},
    {ChainFunction::h0, "h0"},
    {ChainFunction::v, "v"},
    {ChainFunction::v_prime, "v_prime"},
    {ChainFunction::v_dprime, "v_dprime"},
    {ChainFunction::v_tprime, "v_tprime"},
    {ChainFunction::w, "w"},
    {ChainFunction::p_quad, "p_quad"},
    {ChainFunction::m, "m"},
    {ChainFunction::u, "u"},
    {ChainFunction::b_factor, "b_factor"},
    {ChainFunction::q_factor, "q_factor"},
}};

template <class Real>
Real v_dprime_bracket(const Real& c, const Real& t) {
  using std::pow;
  return -c + c * (1 - 2 * c) * (c - 1) * pow(t, c - 2) - c * (1 - 2 * c) * (c + 1) * pow(t, c - 1) +
         (2 * c - 1) * (1 - 2 * c * c) * pow(t, 2 * c - 2) + (1 - c) * (1 - c) * (1 + 2 * c) * pow(t, 2 * c - 1) +
         c * (2 * c - 1) * (c - 1) * pow(t, 2 * c - 3);
}

template <class Real>
Real w_value(const Real& c, const Real& t) {
  using std::pow;
  return c * (c - 2) - (c + 1) * c * t - 2 * pow(t, c) * (1 - 2 * c * c) + (1 - c) * (1 + 2 * c) * pow(t, c + 1) -
         c * (2 * c - 3) * pow(t, c - 1);
}

// (1-c)(t^c+1)(1-t)/(t^c-t)
template <class Real>
Real fraction(const Real& c, const Real& t) {
  using std::pow;
  const Real tc = pow(t, c);
  return (1 - c) * (tc + 1) * (1 - t) / (tc - t);
}

}  // namespace

std::string_view to_string(ChainFunction fn) noexcept {
  for (const auto& [f, name] : kChainNames) {
    if (f == fn) return name;
  }
  return "unknown";
}

std::optional<ChainFunction> chain_function_from_string(std::string_view name) {
  for (const auto& [f, n] : kChainNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

ChainContext ChainContext::from_c(double c, double delta) {
  require(c != 0 && std::isfinite(c), Errc::DomainError, "c = 1/p must be finite and nonzero");
  return {1 / c, c, delta};
}

ChainContext ChainContext::from_p(double p, double delta) {
  require(p != 0 && std::isfinite(p), Errc::DomainError, "p must be finite and nonzero");
  return {p, 1 / p, delta};
}

template <class Real>
Real chain_value(ChainFunction fn, const Real& c, const Real& t) {
  using std::log;
  using std::pow;
  require(c != 0, Errc::DomainError, "c must be nonzero");

  if (fn == ChainFunction::h0) {
    require(c != 1, Errc::NameRequiresC, "h(0) is not defined at c = 1");
    if (c < 0) return negative_infinity<Real>();
    if (c > 1) return std::numeric_limits<Real>::infinity();
    return -2 * c * log(Real(2)) - log(Real(1 - c));
  }

  require(t > 0 && t <= 1, Errc::DomainError, "t must lie in (0, 1]");
  const bool needs_c_ne_1 = fn == ChainFunction::f_prime || fn == ChainFunction::g || fn == ChainFunction::h;
  require(!(needs_c_ne_1 && c == 1), Errc::NameRequiresC, std::string(to_string(fn)) + " needs c != 1");

  switch (fn) {
    case ChainFunction::f: {
      const Real ratio = 4 * t / ((t + 1) * (t + 1));
      return -log1p_real(Real(pow(t, c))) / c + log1p_real(t) + (1 - c) / c * log1p_real(Real(pow(ratio, c)));
    }
    case ChainFunction::f_prime: {
      if (t == 1) return Real(0);
      const Real tc = pow(t, c);
      const Real a = (1 + t) * (1 + t) / (4 * t);
      return (1 - c) * (1 - t) / (t * (1 + t)) *
             (1 / (pow(a, c) + 1) - (tc - t) / ((1 - c) * (tc + 1) * (1 - t)));
    }
    case ChainFunction::g: {
      if (t == 1) return Real(0);
      const Real a = (1 + t) * (1 + t) / (4 * t);
      return pow(a, c) - (fraction(c, t) - 1);
    }
    case ChainFunction::h: {
      if (t == 1) return Real(0);
      const Real a = (1 + t) * (1 + t) / (4 * t);
      return c * log(a) - log(Real(fraction(c, t) - 1));
    }
    case ChainFunction::v:
      return t * (2 * c * c - 1) - t * t * c * c + 2 * c * (1 - 2 * c) * (pow(t, c) - pow(t, c + 1)) +
             pow(t, 2 * c) * (1 - 2 * c * c) + (pow(t, 1 + 2 * c) - 1) * (1 - c) * (1 - c) +
             pow(t, 2 * c - 1) * c * c;
    case ChainFunction::v_prime:
      return 2 * c * c - 1 - 2 * c * c * t + 2 * c * (1 - 2 * c) * (c * pow(t, c - 1) - (c + 1) * pow(t, c)) +
             2 * c * (1 - 2 * c * c) * pow(t, 2 * c - 1) + (1 - c) * (1 - c) * (1 + 2 * c) * pow(t, 2 * c) +
             c * c * (2 * c - 1) * pow(t, 2 * c - 2);
    case ChainFunction::v_dprime:
      return 2 * c * v_dprime_bracket(c, t);
    case ChainFunction::q_factor:
      return v_dprime_bracket(c, t);
    case ChainFunction::v_tprime:
      return 2 * c * (1 - 2 * c) * (c - 1) * pow(t, c - 3) * w_value(c, t);
    case ChainFunction::w:
      return w_value(c, t);
    case ChainFunction::p_quad:
      return t * t * (c + 1) * (1 + 2 * c) + 2 * t * (1 - 2 * c * c) + 2 * c * c - 7 * c + 6;
    case ChainFunction::m:
      return c * (2 - c) * pow(t, 1 - c) + c * (c + 1) * pow(t, 2 - c) + 2 * (1 - 2 * c * c) * t +
             (c - 1) * (1 + 2 * c) * t * t + c * (2 * c - 3);
    case ChainFunction::u:
      return -c * pow(t, 3 - 2 * c) + c * (1 - 2 * c) * (c - 1) * pow(t, 1 - c) -
             c * (1 - 2 * c) * (c + 1) * pow(t, 2 - c) + (2 * c - 1) * (1 - 2 * c * c) * t +
             (1 - c) * (1 - c) * (1 + 2 * c) * t * t + c * (2 * c - 1) * (c - 1);
    case ChainFunction::b_factor:
      return c * c * c - c - t * c * (c + 1) * (c - 2) + 2 * pow(t, 2 - c) * (2 * c - 3);
    case ChainFunction::h0:
      break;
  }
  fail(Errc::DomainError, "unknown chain function");
}

template double chain_value<double>(ChainFunction, const double&, const double&);
template QuadReal chain_value<QuadReal>(ChainFunction, const QuadReal&, const QuadReal&);

double chain_eval(ChainFunction fn, const ChainContext& ctx, double t) {
  return to_double(chain_value<QuadReal>(fn, QuadReal(ctx.c), QuadReal(t)));
}

double fraction_lemma_value(double c, double t) {
  require(c != 1, Errc::NameRequiresC, "the fraction vanishes identically at c = 1");
  require(t > 0 && t < 1, Errc::DomainError, "t must lie in (0, 1)");
  return to_double(fraction(QuadReal(c), QuadReal(t)));
}

double q_factor_c2(double t) { return (t - 1) * (5 * t * t - 16 * t + 8); }

// ---------------------------------------------------------------------------
// Sign changes

std::string_view to_string(Pattern p) noexcept {
  switch (p) {
    case Pattern::Positive: return "Positive";
    case Pattern::Negative: return "Negative";
    case Pattern::PlusToMinus: return "PlusToMinus";
    case Pattern::MinusToPlus: return "MinusToPlus";
    case Pattern::Other: return "Other";
  }
  return "Other";
}

namespace {

int sign_of(const QuadReal& v) {
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

}  // namespace

SignChangePattern scan_sign_changes(const QuadFunction& fn, double lo, double hi, const ScanOptions& opts) {
  require(opts.grid_size >= 1000, Errc::TooCoarse, "sign scans need at least 1000 grid points");
  require(lo < hi, Errc::DomainError, "scan interval must be nonempty");

  std::vector<double> ts;
  ts.reserve(opts.grid_size + opts.log_points);
  if (opts.log_points > 0 && opts.log_floor > 0 && opts.log_floor < lo) {
    const double ratio = std::log(lo / opts.log_floor);
    for (std::size_t k = 0; k < opts.log_points; ++k) {
      ts.push_back(opts.log_floor * std::exp(ratio * static_cast<double>(k) / opts.log_points));
    }
  }
  for (std::size_t i = 0; i < opts.grid_size; ++i) {
    ts.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(opts.grid_size - 1));
  }

  std::vector<QuadReal> vals(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    vals[i] = fn(QuadReal(ts[i]));
    require(!boost::multiprecision::isnan(vals[i]), Errc::DomainError,
            "function is NaN at t = " + std::to_string(ts[i]));
  }

  // Zero classification against the 5-sample neighbourhood.
  const std::size_t n = ts.size();
  std::vector<int> signs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t a = i >= 2 ? i - 2 : 0;
    const std::size_t b = std::min(n - 1, i + 2);
    QuadReal scale = 0;
    for (std::size_t j = a; j <= b; ++j) {
      // Only neighbours at a comparable t count: near a steep end the magnitudes
      // of index-adjacent samples can differ by many orders.
      if (std::max(ts[i], ts[j]) > 2 * std::min(ts[i], ts[j])) continue;
      scale = std::max(scale, QuadReal(abs(vals[j])));
    }
    signs[i] = abs(vals[i]) <= QuadReal(opts.zero_rel) * scale ? 0 : sign_of(vals[i]);
    require(!(i > 0 && signs[i] == 0 && signs[i - 1] == 0), Errc::TooCoarse,
            "adjacent zero-ambiguous samples near t = " + std::to_string(ts[i]));
  }

  auto refine = [&](double a, double b, int sa) {
    while (b - a > opts.bracket_width) {
      const double mid = 0.5 * (a + b);
      if (mid == a || mid == b) break;
      const int sm = sign_of(fn(QuadReal(mid)));
      if (sm == 0) return std::pair{mid, mid};
      if (sm == sa) {
        a = mid;
      } else {
        b = mid;
      }
    }
    return std::pair{a, b};
  };

  SignChangePattern out;
  int prev_sign = 0;
  double prev_t = 0;
  int first_sign = 0;
  if (opts.left_limit_sign && *opts.left_limit_sign != 0) {
    prev_sign = *opts.left_limit_sign;
    first_sign = prev_sign;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (signs[i] == 0) continue;
    if (first_sign == 0) first_sign = signs[i];
    if (prev_sign != 0 && signs[i] != prev_sign) {
      auto [a, b] = refine(prev_t, ts[i], prev_sign);
      out.crossings.push_back({a, b, prev_sign, signs[i]});
    }
    prev_sign = signs[i];
    prev_t = ts[i];
  }
  require(first_sign != 0, Errc::TooCoarse, "no sample could be classified");

  if (out.crossings.empty()) {
    out.overall = first_sign > 0 ? Pattern::Positive : Pattern::Negative;
  } else if (out.crossings.size() == 1) {
    out.overall = out.crossings.front().sign_before > 0 ? Pattern::PlusToMinus : Pattern::MinusToPlus;
  } else {
    out.overall = Pattern::Other;
  }
  return out;
}

SignChangePattern scan_sign_changes(const std::function<double(double)>& fn, double lo, double hi,
                                    const ScanOptions& opts) {
  return scan_sign_changes(QuadFunction([&fn](const QuadReal& t) { return QuadReal(fn(to_double(t))); }), lo, hi,
                           opts);
}

std::optional<int> chain_left_limit_sign(ChainFunction fn, double c) {
  // Limits as t -> 0+: h(0) from the case table (g shares its sign), f' carries
  // the extra factor sign(1-c) and the opposite sign of g, v(0) = +inf for
  // c < 1/2 and -(1-c)^2 for c > 1/2, v''(0) has the sign of v(0).
  auto h_sign = [c]() -> std::optional<int> {
    if (c < 0) return -1;
    if (c < 0.5) return -1;
    if (c == 0.5 || c == 1) return std::nullopt;
    return 1;
  };
  switch (fn) {
    case ChainFunction::h:
    case ChainFunction::g:
      return h_sign();
    case ChainFunction::f_prime: {
      const auto s = h_sign();
      if (!s || c == 1) return std::nullopt;
      return (c < 1 ? 1 : -1) * -*s;
    }
    case ChainFunction::v:
    case ChainFunction::v_dprime:
    case ChainFunction::q_factor:
      if (c == 0.5 || c == 1) return std::nullopt;
      return c < 0.5 ? 1 : -1;
    case ChainFunction::w:
      if (c < 0) return -1;
      if (c < 1) return 1;
      return std::nullopt;
    case ChainFunction::m:
      if (c > 1 && c < 2) return 1;
      return std::nullopt;
    case ChainFunction::u:
      if (c > 2) return -1;
      return std::nullopt;
    case ChainFunction::b_factor:
      if (c > 2) return 1;
      return std::nullopt;
    case ChainFunction::p_quad: {
      const double p0 = 2 * c * c - 7 * c + 6;
      if (p0 == 0) return std::nullopt;
      return p0 > 0 ? 1 : -1;
    }
    default:
      return std::nullopt;
  }
}

SignChangePattern sign_changes(ChainFunction fn, const ChainContext& ctx, std::size_t grid_size) {
  require(fn != ChainFunction::h0, Errc::DomainError, "h0 is a constant, not a function of t");
  const QuadReal c(ctx.c);
  ScanOptions opts;
  opts.grid_size = grid_size;
  opts.log_points = std::max<std::size_t>(grid_size / 20, 50);
  opts.left_limit_sign = chain_left_limit_sign(fn, ctx.c);
  return scan_sign_changes(QuadFunction([fn, c](const QuadReal& t) { return chain_value<QuadReal>(fn, c, t); }),
                           ctx.delta, 1 - ctx.delta, opts);
}

std::optional<Pattern> expected_pattern(ChainFunction fn, double c) {
  if (c == 0 || c == 0.5 || c == 1) return std::nullopt;
  switch (fn) {
    case ChainFunction::f_prime:
      if (c < 0) return Pattern::Positive;
      if (c < 0.5 || c > 1) return Pattern::PlusToMinus;
      return Pattern::MinusToPlus;
    case ChainFunction::g:
    case ChainFunction::h:
      if (c < 0) return Pattern::Negative;
      if (c < 0.5) return Pattern::MinusToPlus;
      return Pattern::PlusToMinus;
    case ChainFunction::v:
    case ChainFunction::v_dprime:
      if (c < 0) return Pattern::Positive;
      if (c < 0.5) return Pattern::PlusToMinus;
      return Pattern::MinusToPlus;
    case ChainFunction::w:
      if (c < 0) return Pattern::Negative;
      if (c < 1) return Pattern::PlusToMinus;
      return std::nullopt;
    case ChainFunction::p_quad:
      if (c < 1) return Pattern::Positive;
      return std::nullopt;
    case ChainFunction::m:
      if (c > 1 && c < 2) return Pattern::PlusToMinus;
      return std::nullopt;
    case ChainFunction::q_factor:
      if (c > 1 && c <= 2) return Pattern::MinusToPlus;
      return std::nullopt;
    case ChainFunction::u:
      if (c > 2) return Pattern::MinusToPlus;
      return std::nullopt;
    case ChainFunction::b_factor:
      if (c > 2) return Pattern::Positive;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

bool ChainReport::all_match() const {
  for (const auto& a : audited) {
    if (!a.match) return false;
  }
  return fraction_lemma_holds && endpoints.holds;
}

namespace {

std::string scope_of(ChainFunction fn) {
  switch (fn) {
    case ChainFunction::w: return "c < 1";
    case ChainFunction::p_quad: return "c < 1";
    case ChainFunction::m: return "1 < c < 2";
    case ChainFunction::q_factor: return "1 < c <= 2";
    case ChainFunction::u: return "c > 2";
    case ChainFunction::b_factor: return "c > 2";
    default: return "all c";
  }
}

EndpointIdentities endpoint_identities(double c) {
  const QuadReal cq(c);
  const QuadReal one(1);
  EndpointIdentities e{};
  e.v_at_1 = to_double(chain_value(ChainFunction::v, cq, one));
  e.v_prime_at_1 = to_double(chain_value(ChainFunction::v_prime, cq, one));
  e.v_dprime_at_1 = to_double(chain_value(ChainFunction::v_dprime, cq, one));
  e.v_tprime_at_1 = to_double(chain_value(ChainFunction::v_tprime, cq, one));
  e.v_tprime_expected = 2 * c * (1 - 2 * c) * (c - 1) * (c - 1);
  // h has a removable singularity at t = 1; approach it instead of reading the patched value.
  e.h_at_1 = to_double(chain_value(ChainFunction::h, cq, QuadReal(1) - QuadReal(1e-12)));
  e.w_at_1 = to_double(chain_value(ChainFunction::w, cq, one));
  e.w_expected = c - 1;
  const double vt_scale = std::max(std::abs(e.v_tprime_expected), 1e-300);
  e.holds = std::abs(e.v_at_1) <= 1e-10 && std::abs(e.v_prime_at_1) <= 1e-10 && std::abs(e.v_dprime_at_1) <= 1e-10 &&
            std::abs(e.v_tprime_at_1 - e.v_tprime_expected) <= 1e-8 * vt_scale && std::abs(e.h_at_1) <= 1e-10 &&
            std::abs(e.w_at_1 - e.w_expected) <= 1e-12 * std::max(1.0, std::abs(e.w_expected));
  return e;
}

}  // namespace

ChainReport audit_chain(const ChainContext& ctx, std::size_t grid_size) {
  const double c = ctx.c;
  require(c != 0 && c != 0.5 && c != 1, Errc::DomainError, "the chain asserts no pattern at c in {0, 1/2, 1}");

  ChainReport rep;
  rep.c = c;
  rep.p = ctx.p;
  rep.grid_size = grid_size;

  for (ChainFunction fn : {ChainFunction::f_prime, ChainFunction::g, ChainFunction::h, ChainFunction::v,
                           ChainFunction::v_dprime}) {
    const Pattern expected = *expected_pattern(fn, c);
    SignChangePattern observed = sign_changes(fn, ctx, grid_size);
    const bool match = observed.overall == expected;
    rep.audited.push_back({fn, std::move(observed), expected, match, "all c"});
  }
  for (ChainFunction fn : {ChainFunction::w, ChainFunction::p_quad, ChainFunction::m, ChainFunction::q_factor,
                           ChainFunction::u, ChainFunction::b_factor}) {
    const auto expected = expected_pattern(fn, c);
    if (!expected) continue;
    SignChangePattern observed = sign_changes(fn, ctx, grid_size);
    const bool match = observed.overall == *expected;
    rep.informational.push_back({fn, std::move(observed), *expected, match, scope_of(fn)});
  }

  rep.fraction_lemma_holds = true;
  const QuadReal cq(c);
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double t = ctx.delta + (1 - 2 * ctx.delta) * static_cast<double>(i) / static_cast<double>(grid_size - 1);
    if (!(fraction(cq, QuadReal(t)) > 1)) {
      rep.fraction_lemma_holds = false;
      break;
    }
  }
  rep.endpoints = endpoint_identities(c);
  return rep;
}

}  // namespace sharplp
