#include <cmath>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "sharplp/means.hpp"

using namespace sharplp;

TEST_CASE("power_mean examples") {
  CHECK(power_mean(2.5, 2.5, 3.0) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(power_mean(2.5, 2.5, -20.0) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(power_mean(1.0, 4.0, 0.0) == 2);
  CHECK(power_mean(3.0, 4.0, 2.0) == doctest::Approx(std::sqrt(12.5)).epsilon(1e-15));
  CHECK_THROWS_AS(power_mean(0.0, 1.0, 1.0), Error);
}

TEST_CASE("power_mean is nondecreasing and continuous in q") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.01, 5);
  for (int t = 0; t < 200; ++t) {
    const double x = u(rng), y = u(rng);
    double prev = power_mean(x, y, -40.0);
    for (double q = -39.5; q <= 40; q += 0.5) {
      const double m = power_mean(x, y, q);
      CHECK(m >= prev * (1 - 1e-14));
      prev = m;
    }
    // Continuity across q = 0 and agreement with the oracle.
    CHECK(power_mean(x, y, 8.0) == doctest::Approx(power_mean(x, y, 8.0 + 1e-9)).epsilon(1e-9));
    CHECK(power_mean(x, y, 1e-9) == doctest::Approx(power_mean(x, y, 0.0)).epsilon(1e-8));
    CHECK(power_mean(x, y, 3.0) == doctest::Approx(static_cast<double>(oracle::power_mean(x, y, 3.0))).epsilon(1e-14));
  }
}

TEST_CASE("constant_factor examples") {
  for (double p : {-3.0, 0.5, 3.0, 7.0}) CHECK(constant_factor(0.5, p) == doctest::Approx(1).epsilon(1e-15));
  CHECK(constant_factor(0.0, 3.0, 2.0 / 3) == 1);
  CHECK(constant_factor(1.0, 3.0, 2.0 / 3) == 1);
  CHECK(constant_factor(0.75, 4.0, 0.5) == doctest::Approx(1.014412575842875).epsilon(1e-14));
  CHECK(constant_factor(0.75, 4.0, 0.5) ==
        doctest::Approx(static_cast<double>(oracle::constant_factor(0.75, 4, 0.5))).epsilon(1e-14));
  try {
    constant_factor(0.0, -1.0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EndpointWithNegativeP);
  }
}

TEST_CASE("constant_factor agrees with the oracle, including large |p|") {
  for (double p : {-40.0, -2.0, 0.25, 1.5, 3.0, 12.0, 60.0}) {
    for (double a : {0.01, 0.2, 0.4, 0.6, 0.93, 0.999}) {
      const double ref = static_cast<double>(oracle::constant_factor(a, p, 2 / p));
      CHECK(constant_factor(a, p) == doctest::Approx(ref).epsilon(1e-12));
      CHECK(to_double(constant_factor<HighReal>(HighReal(a), HighReal(p), HighReal(2 / p))) == doctest::Approx(ref).epsilon(1e-15));
    }
  }
}

TEST_CASE("region law of the constant-case factor") {
  for (int i = 1; i <= 999; ++i) {
    const double a = i / 1000.0;
    for (double p : {0.25, 0.5, 0.75, 2.0, 2.5, 3.0, 4.0, 7.0, 12.0}) CHECK(constant_factor(a, p) >= 1 - 1e-10);
    for (double p : {-5.0, -2.0, -0.5, 1.2, 1.5, 1.9}) CHECK(constant_factor(a, p) <= 1 + 1e-10);
  }
}

TEST_CASE("constant_factor is nonincreasing in the exponent of R for p >= 2") {
  for (double p : {2.0, 3.0, 5.0, 9.0}) {
    for (double a : {0.05, 0.3, 0.6, 0.85}) {
      double prev = constant_factor(a, p, 0.01);
      for (double q = 0.05; q <= 4; q += 0.05) {
        const double v = constant_factor(a, p, q);
        CHECK(v <= prev * (1 + 1e-14));
        prev = v;
      }
    }
  }
}

TEST_CASE("power-mean form has the sign of the constant-case factor") {
  for (double p : {-4.0, -0.5, 0.4, 1.3, 1.8, 2.5, 3.0, 6.0}) {
    for (int i = 1; i < 100; ++i) {
      const double a = i / 100.0;
      const QMeansSides q = qmeans_sides(a, 1 - a, p);
      const double gap = (q.rhs - q.lhs) / q.lhs;
      const double cf = constant_factor(a, p) - 1;
      if (std::abs(cf) > 1e-12) {
        CHECK(std::signbit(gap) == std::signbit(cf));
        // At (a, 1-a) the power-mean ratio is the constant-case factor itself.
        CHECK(q.rhs / q.lhs == doctest::Approx(cf + 1).epsilon(1e-12));
      }
      CHECK(q.satisfied);
    }
  }
}

TEST_CASE("agm_chain") {
  auto c = agm_chain(2.0, 2.0, 3.0);
  for (double t : c.terms) CHECK(std::abs(t) <= 1e-15);

  c = agm_chain(4.0, 1.0, 3.0);
  CHECK(c.ordered());
  CHECK(c.terms[3] > 0);
  CHECK(c.p_dual == doctest::Approx(1.5));

  c = agm_chain(1.0, 1.0 + 1e-8, 5.0);
  for (double t : c.terms) CHECK(std::abs(t) <= 1e-12);
  CHECK(c.ordered());

  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> u(0.01, 10);
  for (int t = 0; t < 500; ++t) CHECK(agm_chain(u(rng), u(rng), 2.0 + u(rng)).ordered());

  CHECK_THROWS_AS(agm_chain(1.0, 2.0, 2.0), Error);
  CHECK_THROWS_AS(agm_chain(-1.0, 2.0, 3.0), Error);
}

TEST_CASE("eta_family examples") {
  for (double s : {0.0, 0.1, 0.5, 0.9}) {
    const auto e2 = eta_family(s, 2.0);
    CHECK(e2.eta == doctest::Approx(1 + s));
    CHECK(std::abs(e2.f_p_s) <= 1e-15);

    const auto em = eta_family(s, -1.0);
    CHECK(em.eta == doctest::Approx(1 / (1 - s)));
    CHECK(em.f_p_s == doctest::Approx(std::sqrt(1 - s) + 1 / std::sqrt(1 - s) - 2).epsilon(1e-12));
    CHECK(em.f_p_s >= 0);
  }
  for (double p : {-3.0, 0.5, 1.0, 4.0}) {
    const auto e = eta_family(0.0, p);
    CHECK(e.eta == 1);
    CHECK(e.f_p_s == 0);
  }
  CHECK_THROWS_AS(eta_family(1.0, 3.0), Error);
  CHECK_THROWS_AS(eta_family(-0.1, 3.0), Error);
}

TEST_CASE("f_p is continuous through the p = 1 switch") {
  for (double s : {0.01, 0.3, 0.8}) {
    const double at_one = eta_family(s, 1.0).f_p_s;
    CHECK(eta_family(s, 1 + 1e-7).f_p_s == at_one);
    CHECK(eta_family(s, 1 + 1e-4).f_p_s == doctest::Approx(at_one).epsilon(1e-3).scale(1));
    CHECK(eta_family(s, 1 - 1e-4).f_p_s == doctest::Approx(at_one).epsilon(1e-3).scale(1));
  }
}

TEST_CASE("sign law of f_p") {
  for (int i = 0; i <= 2000; ++i) {
    const double s = std::min(i / 2000.0, 1 - 1e-6);
    for (double p : {-3.0, -1.0, 3.0, 5.0, 9.0}) CHECK(eta_family(s, p).f_p_s >= -1e-12);
    for (double p : {0.3, 0.8, 1.0, 1.4, 1.9}) CHECK(eta_family(s, p).f_p_s <= 1e-12);
  }
}

TEST_CASE("g_rp") {
  for (double s : {0.0, 0.01, 0.4, 0.9}) {
    for (double p : {-2.0, 0.5, 3.0}) {
      CHECK(g_rp(s, 1.0, p) == doctest::Approx(eta_family(s, p).f_p_s).epsilon(1e-12).scale(1));
    }
  }
  for (double r : {0.5, 1.0, 2.0}) CHECK(g_rp(0.0, r, 3.0) == 0);
  const double v = g_rp(1e-4, 1.2, 3.0);
  CHECK(v == doctest::Approx(-6e-5).epsilon(0.1));
  CHECK_THROWS_AS(g_rp(0.1, 1.0, 1.0), Error);
  CHECK_THROWS_AS(g_rp(0.1, 0.0, 3.0), Error);
}

TEST_CASE("sharpness_probe examples") {
  auto s = sharpness_probe(3.0, 1.0);
  CHECK_FALSE(s.witness_s.has_value());
  CHECK(std::abs(s.slope_measured) <= 1e-6);

  s = sharpness_probe(3.0, 1.1);
  REQUIRE(s.witness_s.has_value());
  CHECK(*s.witness_value < -1e-12);
  CHECK(s.slope_predicted == doctest::Approx(-0.3));
  CHECK(s.slope_measured == doctest::Approx(-0.3).epsilon(0.01));

  s = sharpness_probe(-2.0, 0.9);
  REQUIRE(s.witness_s.has_value());
  CHECK(*s.witness_value < -1e-12);
  CHECK(s.slope_predicted == doctest::Approx(-0.2));

  CHECK_THROWS_AS(sharpness_probe(2.0, 1.1), Error);
}

TEST_CASE("witnesses appear exactly where the exponent is too strong") {
  for (double p : {-3.0, -0.5, 0.3, 0.8, 1.5, 2.5, 4.0, 8.0}) {
    for (double r : {0.5, 0.9, 1.0, 1.1, 1.6}) {
      const auto s = sharpness_probe(p, r);
      CHECK(s.witness_s.has_value() == sharpness_witness_expected(p, r));
      if (s.witness_s) {
        const double v = *s.witness_value;
        CHECK(std::abs(v) > 1e-12);
        CHECK((s.claimed_sign > 0 ? v < 0 : v > 0));
      }
      CHECK(s.slope_measured == doctest::Approx(s.slope_predicted).epsilon(0.01).scale(1e-4));
    }
  }
}
