#pragma once

// Scalar types and a few log-domain helpers shared by every module.
//
// Double is the default evaluation path. HighReal (50 significant digits) sits
// behind the same templated operations and serves as the reference path; the
// proof audit evaluates in QuadReal so that cancellation near t = 1 stays far
// below the magnitudes it classifies.

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

#include <boost/math/special_functions/log1p.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/float128.hpp>

namespace sharplp {

using HighReal = boost::multiprecision::cpp_bin_float_50;
using QuadReal = boost::multiprecision::float128;

inline double log1p_real(double x) { return std::log1p(x); }

// Boost's float128 log1p overload does not compile against libquadmath here;
// call the C entry point directly.
inline QuadReal log1p_real(const QuadReal& x) { return QuadReal(::log1pq(x.backend().value())); }

inline HighReal log1p_real(const HighReal& x) { return boost::math::log1p(x); }

template <class Real>
Real negative_infinity() {
  return -std::numeric_limits<Real>::infinity();
}

/// log(exp(a) + exp(b)) without overflow; either argument may be -inf.
template <class Real>
Real log_add_exp(const Real& a, const Real& b) {
  using std::abs;
  using std::exp;
  if (a == negative_infinity<Real>()) return b;
  if (b == negative_infinity<Real>()) return a;
  const Real hi = a > b ? a : b;
  const Real lo = a > b ? b : a;
  return hi + log1p_real(Real(exp(lo - hi)));
}

/// log(sum_i exp(terms_i)); returns -inf for an empty or all -inf input.
template <class Real>
Real log_sum_exp(std::span<const Real> terms) {
  using std::exp;
  using std::log;
  Real hi = negative_infinity<Real>();
  for (const Real& t : terms) {
    if (t > hi) hi = t;
  }
  if (hi == negative_infinity<Real>()) return hi;
  Real acc = 0;
  for (const Real& t : terms) {
    if (t != negative_infinity<Real>()) acc += exp(t - hi);
  }
  return hi + log(acc);
}

template <class Real>
double to_double(const Real& x) {
  return static_cast<double>(x);
}

}  // namespace sharplp
