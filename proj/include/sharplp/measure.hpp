#pragma once

// Finite discrete measure spaces, simple functions on them, and the
// p-"norm" functionals for every real p != 0.

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "sharplp/errors.hpp"
#include "sharplp/real.hpp"

namespace sharplp {

/// Magnitude of p above which the functionals are summed in log-domain.
inline constexpr double kLogDomainThreshold = 8.0;

template <class Real>
class BasicMeasureSpace {
 public:
  explicit BasicMeasureSpace(std::vector<Real> weights) : weights_(std::move(weights)) {
    using std::isfinite;
    require(!weights_.empty(), Errc::InvalidSpace, "a measure space needs at least one point");
    for (const Real& w : weights_) {
      require(w > 0 && isfinite(w), Errc::InvalidSpace, "point masses must be positive and finite");
    }
  }
  BasicMeasureSpace(std::initializer_list<Real> weights)
      : BasicMeasureSpace(std::vector<Real>(weights)) {}

  /// n points of unit mass.
  static BasicMeasureSpace counting(std::size_t n) { return BasicMeasureSpace(std::vector<Real>(n, Real(1))); }

  std::size_t size() const noexcept { return weights_.size(); }
  std::span<const Real> weights() const noexcept { return weights_; }
  const Real& operator[](std::size_t i) const { return weights_[i]; }

  Real total_mass() const {
    Real s = 0;
    for (const Real& w : weights_) s += w;
    return s;
  }

  template <class To>
  BasicMeasureSpace<To> rebind() const {
    std::vector<To> out;
    out.reserve(weights_.size());
    for (const Real& w : weights_) out.emplace_back(w);
    return BasicMeasureSpace<To>(std::move(out));
  }

 private:
  std::vector<Real> weights_;
};

/// Real values aligned index-by-index with a measure space. Alignment is
/// checked by each operation, not at construction.
template <class Real>
class BasicSimpleFunction {
 public:
  BasicSimpleFunction() = default;
  explicit BasicSimpleFunction(std::vector<Real> values) : values_(std::move(values)) {}
  BasicSimpleFunction(std::initializer_list<Real> values) : values_(values) {}

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const Real> values() const noexcept { return values_; }
  const Real& operator[](std::size_t i) const { return values_[i]; }

  bool nonnegative() const {
    for (const Real& v : values_) {
      if (v < 0) return false;
    }
    return true;
  }
  bool strictly_positive() const {
    for (const Real& v : values_) {
      if (!(v > 0)) return false;
    }
    return true;
  }
  bool has_zero() const {
    for (const Real& v : values_) {
      if (v == 0) return true;
    }
    return false;
  }

  template <class To>
  BasicSimpleFunction<To> rebind() const {
    std::vector<To> out;
    out.reserve(values_.size());
    for (const Real& v : values_) out.emplace_back(v);
    return BasicSimpleFunction<To>(std::move(out));
  }

  friend BasicSimpleFunction operator+(const BasicSimpleFunction& a, const BasicSimpleFunction& b) {
    require(a.size() == b.size(), Errc::MisalignedFunction, "pointwise sum of different lengths");
    std::vector<Real> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return BasicSimpleFunction(std::move(out));
  }
  friend BasicSimpleFunction operator*(const BasicSimpleFunction& a, const BasicSimpleFunction& b) {
    require(a.size() == b.size(), Errc::MisalignedFunction, "pointwise product of different lengths");
    std::vector<Real> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
    return BasicSimpleFunction(std::move(out));
  }
  friend BasicSimpleFunction operator*(const Real& s, const BasicSimpleFunction& a) {
    std::vector<Real> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * a[i];
    return BasicSimpleFunction(std::move(out));
  }

 private:
  std::vector<Real> values_;
};

using MeasureSpace = BasicMeasureSpace<double>;
using SimpleFunction = BasicSimpleFunction<double>;

enum class Region { Forward, Reverse, BoundaryP1, BoundaryP2, UndefinedP0 };

struct ExponentRegion {
  double p;
  Region region;
};

inline Region region_of(double p) {
  if (p == 0) return Region::UndefinedP0;
  if (p == 1) return Region::BoundaryP1;
  if (p == 2) return Region::BoundaryP2;
  if (p < 0 || (p > 1 && p < 2)) return Region::Reverse;
  return Region::Forward;
}

inline ExponentRegion classify_exponent(double p) { return {p, region_of(p)}; }

/// Forward and both boundaries share the "<=" direction of the main inequality.
inline bool forward_direction(Region r) { return r != Region::Reverse; }

const char* to_string(Region r) noexcept;

namespace detail {

template <class Real>
void check_functional_args(const BasicSimpleFunction<Real>& f, const BasicMeasureSpace<Real>& space,
                           const Real& p) {
  require(f.size() == space.size(), Errc::MisalignedFunction,
          "function has " + std::to_string(f.size()) + " values, space has " + std::to_string(space.size()));
  require(p != 0, Errc::ZeroExponent, "p = 0 has no p-norm");
  if (p < 0) {
    require(f.strictly_positive(), Errc::NonpositiveValueForNegativeP,
            "negative exponents need strictly positive values");
  }
}

}  // namespace detail

/// log of sum_i w_i |f_i|^p; -inf when every term vanishes (p > 0 only).
template <class Real>
Real log_lp_functional(const BasicSimpleFunction<Real>& f, const BasicMeasureSpace<Real>& space,
                       const std::type_identity_t<Real>& p) {
  using std::abs;
  using std::log;
  detail::check_functional_args(f, space, p);
  std::vector<Real> terms;
  terms.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    terms.push_back(Real(log(space[i]) + p * log(Real(abs(f[i])))));
  }
  return log_sum_exp<Real>(terms);
}

/// sum_i w_i |f_i|^p. Summed in log-domain once |p| exceeds kLogDomainThreshold.
template <class Real>
Real lp_functional(const BasicSimpleFunction<Real>& f, const BasicMeasureSpace<Real>& space,
                   const std::type_identity_t<Real>& p) {
  using std::abs;
  using std::exp;
  using std::pow;
  detail::check_functional_args(f, space, p);
  if (abs(p) > kLogDomainThreshold) {
    const Real l = log_lp_functional(f, space, p);
    return l == negative_infinity<Real>() ? Real(0) : Real(exp(l));
  }
  Real sum = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    sum += space[i] * pow(Real(abs(f[i])), p);
  }
  return sum;
}

/// lp_functional^(1/p). For p < 1 this is not a norm; the contract is the formula.
template <class Real>
Real lp_norm(const BasicSimpleFunction<Real>& f, const BasicMeasureSpace<Real>& space, const std::type_identity_t<Real>& p) {
  using std::abs;
  using std::exp;
  using std::pow;
  if (abs(p) > kLogDomainThreshold) {
    const Real l = log_lp_functional(f, space, p);
    return l == negative_infinity<Real>() ? Real(0) : Real(exp(l / p));
  }
  const Real s = lp_functional(f, space, p);
  return s == 0 ? Real(0) : Real(pow(s, Real(1) / p));
}

/// The coupling term ||f g||_{p/2}.
template <class Real>
Real overlap_norm(const BasicSimpleFunction<Real>& f, const BasicSimpleFunction<Real>& g,
                  const BasicMeasureSpace<Real>& space, const std::type_identity_t<Real>& p) {
  require(f.size() == space.size() && g.size() == space.size(), Errc::MisalignedFunction,
          "f, g and the space must have equal length");
  require(p != 0, Errc::ZeroExponent, "p = 0 has no p-norm");
  return lp_norm(f * g, space, Real(p / 2));
}

template <class Real>
struct BasicProbabilityReduction {
  BasicSimpleFunction<Real> alpha;
  BasicMeasureSpace<Real> prob_space;
};

using ProbabilityReduction = BasicProbabilityReduction<double>;

/// Pushes the measure through (f+g)^p and normalises it: alpha = f/(f+g) on a
/// probability space carrying weights w (f+g)^p / sum_j w_j (f_j+g_j)^p.
template <class Real>
BasicProbabilityReduction<Real> reduce_to_probability(const BasicSimpleFunction<Real>& f,
                                                      const BasicSimpleFunction<Real>& g,
                                                      const BasicMeasureSpace<Real>& space, const std::type_identity_t<Real>& p) {
  using std::exp;
  using std::log;
  require(f.size() == space.size() && g.size() == space.size(), Errc::MisalignedFunction,
          "f, g and the space must have equal length");
  require(p != 0, Errc::ZeroExponent, "p = 0 has no reduction");
  require(f.nonnegative() && g.nonnegative(), Errc::NegativeInput, "reduction needs f, g >= 0");

  const std::size_t n = space.size();
  std::vector<Real> alpha(n);
  std::vector<Real> logw(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Real s = f[i] + g[i];
    require(s > 0, Errc::ZeroSumPoint, "f + g vanishes at point " + std::to_string(i));
    alpha[i] = f[i] / s;
    logw[i] = log(space[i]) + p * log(s);
  }
  const Real total = log_sum_exp<Real>(logw);
  std::vector<Real> w(n);
  Real sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = exp(logw[i] - total);
    sum += w[i];
  }
  for (Real& wi : w) wi /= sum;
  return {BasicSimpleFunction<Real>(std::move(alpha)), BasicMeasureSpace<Real>(std::move(w))};
}

}  // namespace sharplp
