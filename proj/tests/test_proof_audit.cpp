#include <cmath>

#include "doctest.h"
#include "sharplp/errors.hpp"
#include "sharplp/proof_audit.hpp"

using namespace sharplp;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::ZeroPair;
}

QuadReal q(ChainFunction fn, double c, const QuadReal& t) { return chain_value(fn, QuadReal(c), t); }

// Central difference in quad precision.
double dq(ChainFunction fn, double c, double t, double h = 1e-8) {
  const QuadReal tq(t), hq(h);
  return to_double((q(fn, c, tq + hq) - q(fn, c, tq - hq)) / (2 * hq));
}

}  // namespace

TEST_CASE("b and h examples") {
  CHECK(b_of_a(0.5, 3) == 0.25);
  CHECK(h_of_a(0.5, 3) == doctest::Approx(0.125));
  CHECK(b_of_a(0.0, 3) == 1);
  CHECK(b_of_a(1.0, 3) == 1);
  CHECK(h_of_a(1.0, 3) == 0);
  const double a = 0.5 + std::sqrt(0.125);  // a(1-a) = 1/8
  CHECK(b_of_a(a, 3) == doctest::Approx(0.625).epsilon(1e-14));
  CHECK(h_of_a(a, 3) == doctest::Approx(std::pow(0.125, 1.5)).epsilon(1e-14));
  CHECK(code_of([] { b_of_a(0.0, -1); }) == Errc::EndpointWithNegativeP);
  CHECK(code_of([] { h_of_a(1.0, -1); }) == Errc::EndpointWithNegativeP);
}

TEST_CASE("invert_b") {
  for (double p : {-2.0, 0.5, 1.5, 3.0, 7.0}) CHECK(invert_b(std::pow(2.0, 1 - p), p) == 0.5);
  CHECK(invert_b(0.625, 3) == doctest::Approx(0.5 + std::sqrt(0.125)).epsilon(1e-7));
  CHECK(std::abs(b_of_a(invert_b(0.625, 3), 3) - 0.625) <= 1e-14);
  CHECK(invert_b(1 - 1e-12, 3) > 0.999);
  CHECK(invert_b(1.0, 3) == 1);
  // p in (0, 1): b decreases from 2^(1-p) to 1.
  CHECK(std::abs(b_of_a(invert_b(1.2, 0.5), 0.5) - 1.2) <= 1e-13);
  // p < 0: unbounded range above b(1/2); b is steep there, so the residual is relative.
  CHECK(std::abs(b_of_a(invert_b(1e6, -2), -2) - 1e6) <= 1e-12 * 1e6);
  CHECK(code_of([] { invert_b(0.1, 3); }) == Errc::TargetOutOfRange);
  CHECK(code_of([] { invert_b(1.1, 3); }) == Errc::TargetOutOfRange);
  CHECK(code_of([] { invert_b(1.0, -2); }) == Errc::TargetOutOfRange);
}

TEST_CASE("hyperbolic parametrisation") {
  const auto z = hyperbolic_point(0.0, 3.0);
  CHECK(z.db_dx == 0);
  CHECK(z.dh_dx == 0);
  CHECK_FALSE(z.dH_db.has_value());
  CHECK(z.a == 0.5);

  for (double p : {-2.0, 0.5, 1.5, 2.5, 3.0, 7.0}) {
    CHECK(hyperbolic_point(1e-5, p).dH_db.value() == doctest::Approx(dH_db_at_zero(p)).epsilon(1e-8));
    for (double x : {0.01, 0.3, 1.0, 2.5, 5.0}) {
      const auto pt = hyperbolic_point(x, p);
      CHECK(b_of_a(pt.a, p) == doctest::Approx(pt.b).epsilon(1e-10));
      CHECK(h_of_a(pt.a, p) == doctest::Approx(pt.h).epsilon(1e-12));
      CHECK(pt.h == doctest::Approx(std::pow(2 * std::cosh(x), -p)).epsilon(1e-13));
      const double e = 1e-6;
      const auto lo = hyperbolic_point(x - e, p), hi = hyperbolic_point(x + e, p);
      CHECK(pt.db_dx == doctest::Approx((hi.b - lo.b) / (2 * e)).epsilon(1e-6));
      CHECK(pt.dh_dx == doctest::Approx((hi.h - lo.h) / (2 * e)).epsilon(1e-6));
      CHECK(*pt.dH_db == doctest::Approx(pt.dh_dx / pt.db_dx).epsilon(1e-10));
      CHECK(*pt.ddx_dH_db == doctest::Approx((*hi.dH_db - *lo.dH_db) / (2 * e)).epsilon(1e-5));
    }
  }
  const auto p3 = hyperbolic_point(1.0, 3.0);
  CHECK(*p3.d2H_db2 > 0);
  CHECK(code_of([] { hyperbolic_point(-1.0, 3.0); }) == Errc::OutOfDomain);
  CHECK(code_of([] { hyperbolic_point(1.0, 1.0); }) == Errc::ExponentOutOfRange);
}

TEST_CASE("curvature of H: convex for p > 2, concave otherwise") {
  for (double p : {-2.0, 0.5, 1.5, 2.5, 3.0, 7.0}) {
    const bool convex = p > 2;
    for (int i = 1; i <= 200; ++i) {
      const double x = 0.01 + (5 - 0.01) * (i - 1) / 199.0;
      const double d2 = *hyperbolic_point(x, p).d2H_db2;
      CHECK((convex ? d2 > 0 : d2 < 0));
    }
    // Second divided differences of H through the inversion.
    const double b_half = std::pow(2.0, 1 - p);
    const double b_end = p < 0 ? 50 * b_half : 1.0;
    for (int i = 0; i < 40; ++i) {
      const double b0 = b_half + (b_end - b_half) * (0.02 + 0.02 * i);
      const double b1 = b_half + (b_end - b_half) * (0.03 + 0.02 * i);
      const double b2 = b_half + (b_end - b_half) * (0.04 + 0.02 * i);
      const double h0 = H_of_b(b0, p), h1 = H_of_b(b1, p), h2 = H_of_b(b2, p);
      const double dd = ((h2 - h1) / (b2 - b1) - (h1 - h0) / (b1 - b0)) / (b2 - b0);
      if (convex) {
        CHECK(dd >= -1e-10);
      } else {
        CHECK(dd <= 1e-10);
      }
    }
  }
}

TEST_CASE("tanh_gap") {
  CHECK(tanh_gap(2, 1) == doctest::Approx(0.559160).epsilon(1e-6));
  CHECK(tanh_gap(0.5, 1) == doctest::Approx(-0.081320).epsilon(1e-5));
  for (double x : {0.1, 1.0, 5.0}) {
    for (double t : {-1.0, 0.0, 1.0}) CHECK(tanh_gap(t, x) == doctest::Approx(0).scale(1e-15));
    for (int i = 0; i <= 600; ++i) {
      const double t = -3 + i * 0.01;
      if (std::abs(t + 1) < 1e-9 || std::abs(t) < 1e-9 || std::abs(t - 1) < 1e-9) continue;
      const double g = tanh_gap(t, x);
      if (t > 1 || (t > -1 && t < 0)) {
        CHECK(g > 0);
      } else {
        CHECK(g < 0);
      }
    }
  }
}

TEST_CASE("chain function examples") {
  CHECK(chain_eval(ChainFunction::q_factor, ChainContext::from_c(2), 0.5) == doctest::Approx(-0.625).epsilon(1e-14));
  for (int i = 1; i < 1000; ++i) {
    const double t = i / 1000.0;
    CHECK(chain_eval(ChainFunction::q_factor, ChainContext::from_c(2), t) ==
          doctest::Approx(q_factor_c2(t)).scale(1).epsilon(1e-12));
  }
  for (double c : {-3.0, -0.2, 0.3, 0.7, 1.3, 2.0, 8.0}) {
    const ChainContext ctx = ChainContext::from_c(c);
    CHECK(std::abs(chain_eval(ChainFunction::v, ctx, 1)) <= 1e-10);
    CHECK(std::abs(chain_eval(ChainFunction::v_prime, ctx, 1)) <= 1e-10);
    CHECK(std::abs(chain_eval(ChainFunction::v_dprime, ctx, 1)) <= 1e-10);
    CHECK(chain_eval(ChainFunction::v_tprime, ctx, 1) ==
          doctest::Approx(2 * c * (1 - 2 * c) * (c - 1) * (c - 1)).epsilon(1e-8));
    CHECK(chain_eval(ChainFunction::h, ctx, 1) == 0);
    CHECK(std::abs(chain_eval(ChainFunction::h, ctx, 1 - 1e-9)) <= 1e-10);
    CHECK(chain_eval(ChainFunction::w, ctx, 1) == doctest::Approx(c - 1).epsilon(1e-14));
    CHECK(chain_eval(ChainFunction::f, ctx, 1) == doctest::Approx(0).scale(1e-15));
  }
}

TEST_CASE("chain function errors and names") {
  CHECK(code_of([] { chain_eval(ChainFunction::g, ChainContext::from_c(1), 0.5); }) == Errc::NameRequiresC);
  CHECK(code_of([] { chain_eval(ChainFunction::v, ChainContext::from_c(0.3), 0.0); }) == Errc::DomainError);
  CHECK(code_of([] { chain_eval(ChainFunction::v, ChainContext::from_c(0.3), 1.5); }) == Errc::DomainError);
  CHECK(code_of([] { ChainContext::from_c(0); }) == Errc::DomainError);
  for (const char* name : {"f", "f_prime", "g", "h", "h0", "v", "v_prime", "v_dprime", "v_tprime", "w", "p_quad",
                           "m", "u", "b_factor", "q_factor"}) {
    const auto fn = chain_function_from_string(name);
    REQUIRE(fn.has_value());
    CHECK(to_string(*fn) == name);
  }
  CHECK_FALSE(chain_function_from_string("zeta").has_value());
  const ChainContext ctx = ChainContext::from_p(4);
  CHECK(ctx.c * ctx.p == 1);
}

TEST_CASE("double and quad evaluations agree away from the endpoints") {
  for (double c : {-1.0, 0.3, 0.7, 3.0}) {
    for (double t : {0.05, 0.3, 0.6, 0.9}) {
      for (ChainFunction fn : {ChainFunction::f, ChainFunction::g, ChainFunction::h, ChainFunction::v_prime,
                               ChainFunction::w, ChainFunction::m, ChainFunction::u}) {
        const double d = chain_value<double>(fn, c, t);
        const double qd = chain_eval(fn, ChainContext::from_c(c), t);
        CHECK(d == doctest::Approx(qd).epsilon(1e-9).scale(1e-6));
      }
    }
  }
}

TEST_CASE("derivative formulas match finite differences") {
  for (double c : {-1.0, 0.3, 0.7, 3.0}) {
    const ChainContext ctx = ChainContext::from_c(c);
    for (int i = 0; i <= 90; ++i) {
      const double t = 0.05 + 0.01 * i;
      const double fp = chain_eval(ChainFunction::f_prime, ctx, t);
      CHECK(dq(ChainFunction::f, c, t) == doctest::Approx(fp).epsilon(1e-6).scale(1e-12));
      CHECK(dq(ChainFunction::v, c, t) ==
            doctest::Approx(chain_eval(ChainFunction::v_prime, ctx, t)).epsilon(1e-6).scale(1e-12));
      CHECK(dq(ChainFunction::v_prime, c, t) ==
            doctest::Approx(chain_eval(ChainFunction::v_dprime, ctx, t)).epsilon(1e-6).scale(1e-12));
      CHECK(dq(ChainFunction::v_dprime, c, t) ==
            doctest::Approx(chain_eval(ChainFunction::v_tprime, ctx, t)).epsilon(1e-6).scale(1e-12));
    }
  }
}

TEST_CASE("f' factors through g and the fraction") {
  for (double c : {-1.0, 0.3, 0.7, 3.0}) {
    const ChainContext ctx = ChainContext::from_c(c);
    for (int i = 1; i < 100; ++i) {
      const double t = i / 100.0;
      const double a = (1 + t) * (1 + t) / (4 * t);
      const double big_f = fraction_lemma_value(c, t);
      const double g = chain_eval(ChainFunction::g, ctx, t);
      const double expect = -(1 - c) * (1 - t) / (t * (1 + t)) * g / ((std::pow(a, c) + 1) * big_f);
      CHECK(chain_eval(ChainFunction::f_prime, ctx, t) == doctest::Approx(expect).epsilon(1e-10).scale(1e-14));
      CHECK(big_f > 1);
    }
  }
}

TEST_CASE("reduction identities between the chain functions") {
  const QuadReal h(1e-8);
  for (double c : {-0.7, 0.3, 0.7, 1.4, 2.6}) {
    for (double td : {0.1, 0.35, 0.6, 0.85}) {
      const QuadReal t(td), cq(c);
      // h' = v / ((1+t)(t^c - t)^2 (F - 1))
      const QuadReal big_f = (1 - cq) * (pow(t, cq) + 1) * (1 - t) / (pow(t, cq) - t);
      const QuadReal hp = (q(ChainFunction::h, c, t + h) - q(ChainFunction::h, c, t - h)) / (2 * h);
      const QuadReal hv = q(ChainFunction::v, c, t) / ((1 + t) * pow(pow(t, cq) - t, 2) * (big_f - 1));
      CHECK(to_double(hp) == doctest::Approx(to_double(hv)).epsilon(1e-8));
      // v'' = 2c t^(2c-3) u
      CHECK(to_double(q(ChainFunction::v_dprime, c, t)) ==
            doctest::Approx(to_double(2 * cq * pow(t, 2 * cq - 3) * q(ChainFunction::u, c, t))).epsilon(1e-12));
      // w'' = c(1-c) t^(c-3) p(t)
      const QuadReal w2 = (q(ChainFunction::w, c, t + h) - 2 * q(ChainFunction::w, c, t) + q(ChainFunction::w, c, t - h)) / (h * h);
      CHECK(to_double(w2) ==
            doctest::Approx(to_double(cq * (1 - cq) * pow(t, cq - 3) * q(ChainFunction::p_quad, c, t))).epsilon(1e-6));
      // q' = t^(2c-4) (2c-1)(c-1) m
      const QuadReal qp = (q(ChainFunction::q_factor, c, t + h) - q(ChainFunction::q_factor, c, t - h)) / (2 * h);
      CHECK(to_double(qp) ==
            doctest::Approx(to_double(pow(t, 2 * cq - 4) * (2 * cq - 1) * (cq - 1) * q(ChainFunction::m, c, t)))
                .epsilon(1e-8));
      // u''' = t^(-2-c) c(2c-1)(c-1) b(t)
      const QuadReal k(1e-6);
      const QuadReal u3 = (q(ChainFunction::u, c, t + 2 * k) - 2 * q(ChainFunction::u, c, t + k) +
                           2 * q(ChainFunction::u, c, t - k) - q(ChainFunction::u, c, t - 2 * k)) /
                          (2 * k * k * k);
      CHECK(to_double(u3) ==
            doctest::Approx(to_double(pow(t, -2 - cq) * cq * (2 * cq - 1) * (cq - 1) * q(ChainFunction::b_factor, c, t)))
                .epsilon(1e-6));
    }
  }
}

TEST_CASE("h approaches the tabulated limit at t = 0") {
  // The correction to h(0) is of order t^min(c, 1-c), so the approach is
  // checked deep in the quad range rather than at t = 1e-9.
  for (double c : {0.3, 0.7}) {
    const double h0 = chain_eval(ChainFunction::h0, ChainContext::from_c(c), 0.5);
    CHECK(h0 == doctest::Approx(-2 * c * std::log(2.0) - std::log(1 - c)).epsilon(1e-15));
    CHECK(to_double(q(ChainFunction::h, c, QuadReal(1e-24))) == doctest::Approx(h0).scale(1).epsilon(1e-4));
    const double gap9 = std::abs(to_double(q(ChainFunction::h, c, QuadReal(1e-9))) - h0);
    const double gap15 = std::abs(to_double(q(ChainFunction::h, c, QuadReal(1e-15))) - h0);
    CHECK(gap15 < gap9);
  }
  CHECK(chain_eval(ChainFunction::h0, ChainContext::from_c(-1), 0.5) == -INFINITY);
  CHECK(chain_eval(ChainFunction::h0, ChainContext::from_c(1.5), 0.5) == INFINITY);
  const double hm9 = to_double(q(ChainFunction::h, -1, QuadReal(1e-9)));
  const double hm3 = to_double(q(ChainFunction::h, -1, QuadReal(1e-3)));
  CHECK(hm9 < hm3);
  CHECK(hm9 < -10);
  const double hp9 = to_double(q(ChainFunction::h, 1.5, QuadReal(1e-9)));
  const double hp3 = to_double(q(ChainFunction::h, 1.5, QuadReal(1e-3)));
  CHECK(hp9 > hp3);
  CHECK(hp9 > 5);
}

TEST_CASE("sign scan on a linear test function") {
  ScanOptions opts;
  opts.grid_size = 1000;
  const auto s = scan_sign_changes(std::function<double(double)>([](double t) { return t - 0.5; }), 1e-6,
                                   1 - 1e-6, opts);
  CHECK(s.overall == Pattern::MinusToPlus);
  REQUIRE(s.crossings.size() == 1);
  CHECK(s.crossings[0].bracket_lo <= 0.5);
  CHECK(s.crossings[0].bracket_hi >= 0.5);
  CHECK(s.crossings[0].bracket_hi - s.crossings[0].bracket_lo <= 1e-10);

  opts.grid_size = 999;
  CHECK(code_of([&] { scan_sign_changes(std::function<double(double)>([](double t) { return t; }), 0.1, 0.9, opts); }) ==
        Errc::TooCoarse);
  opts.grid_size = 1000;
  CHECK(code_of([&] { scan_sign_changes(std::function<double(double)>([](double) { return 0.0; }), 0.1, 0.9, opts); }) ==
        Errc::TooCoarse);

  const auto two = scan_sign_changes(
      std::function<double(double)>([](double t) { return (t - 0.25) * (t - 0.75); }), 1e-6, 1 - 1e-6, opts);
  CHECK(two.overall == Pattern::Other);
  REQUIRE(two.crossings.size() == 2);
  CHECK(two.crossings[0].bracket_hi < two.crossings[1].bracket_lo);
}

TEST_CASE("sign_changes examples") {
  auto s = sign_changes(ChainFunction::f_prime, ChainContext::from_c(0.3), 2000);
  CHECK(s.overall == Pattern::PlusToMinus);
  CHECK(s.crossings.size() == 1);
  s = sign_changes(ChainFunction::f_prime, ChainContext::from_c(-1), 2000);
  CHECK(s.overall == Pattern::Positive);
  CHECK(s.crossings.empty());
}

TEST_CASE("audit_chain examples") {
  auto r = audit_chain(ChainContext::from_c(0.3), 2000);
  CHECK(r.audited.size() == 5);
  for (const auto& a : r.audited) CHECK(a.match);
  CHECK(r.fraction_lemma_holds);
  CHECK(r.endpoints.holds);
  CHECK(r.all_match());

  r = audit_chain(ChainContext::from_c(2), 2000);
  CHECK(r.audited[0].observed.overall == Pattern::PlusToMinus);
  CHECK(r.audited[1].observed.overall == Pattern::PlusToMinus);
  CHECK(r.audited[3].observed.overall == Pattern::MinusToPlus);
  CHECK(r.all_match());

  r = audit_chain(ChainContext::from_c(-0.5), 2000);
  CHECK(r.audited[0].observed.overall == Pattern::Positive);
  CHECK(r.audited[1].observed.overall == Pattern::Negative);
  CHECK(r.audited[3].observed.overall == Pattern::Positive);
  CHECK(r.all_match());
  for (const auto& a : r.audited) CHECK(a.match == (a.observed.overall == a.expected));

  CHECK(code_of([] { audit_chain(ChainContext::from_c(0.5), 2000); }) == Errc::DomainError);
  CHECK(code_of([] { audit_chain(ChainContext::from_c(1), 2000); }) == Errc::DomainError);
}

TEST_CASE("crossing brackets are disjoint, increasing and narrow") {
  for (double c : {0.05, 0.45, 0.55, 3.5}) {
    const auto r = audit_chain(ChainContext::from_c(c), 2000);
    for (const auto* list : {&r.audited, &r.informational}) {
      for (const auto& a : *list) {
        double prev = 0;
        for (const auto& x : a.observed.crossings) {
          CHECK(x.bracket_lo >= prev);
          CHECK(x.bracket_hi - x.bracket_lo <= 1e-10);
          prev = x.bracket_hi;
        }
      }
    }
  }
}
