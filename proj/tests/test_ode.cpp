#include <doctest.h>

#include <stdexcept>
#include <string>

#include <cmath>
#include <numbers>

#include "oscilab/bounds.hpp"
#include "oscilab/counterexample.hpp"
#include "oscilab/ode.hpp"

using namespace oscilab;

namespace {

LinearSystem zero_system(double lo, double hi) {
  LinearSystem sys;
  sys.dim = 2;
  sys.domain_lo = lo;
  sys.domain_hi = hi;
  sys.entries = {{Polynomial(), Polynomial()}, {Polynomial(), Polynomial()}};
  return sys;
}

}  // namespace

TEST_CASE("zero matrix gives a constant solution") {
  const double x0[] = {1.0, 2.0};
  const DenseSolution sol = integrate_linear(zero_system(-1.0, 1.0), x0, -1.0, 1.0, {});
  for (int i = 0; i <= 100; ++i) {
    const double t = -1.0 + 2.0 * i / 100.0;
    CHECK(sol.eval(t, 1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(sol.eval(t, 2) == doctest::Approx(2.0).epsilon(1e-14));
  }
  const auto [lo, hi] = sol.domain();
  CHECK(lo == -1.0);
  CHECK(hi == 1.0);
  CHECK(sol.dim() == 2);
}

TEST_CASE("x' = x reproduces the exponential") {
  LinearSystem sys;
  sys.dim = 1;
  sys.domain_lo = 0.0;
  sys.domain_hi = 1.0;
  sys.entries = {{Polynomial::constant(1.0)}};
  const double x0[] = {1.0};
  const DenseSolution sol = integrate_linear(sys, x0, 0.0, 1.0, {});
  CHECK(sol.eval(1.0, 1) == doctest::Approx(std::numbers::e).epsilon(1e-9));
  CHECK(sol.eval(0.5, 1) == doctest::Approx(std::exp(0.5)).epsilon(1e-9));
}

TEST_CASE("harmonic oscillator: zeros of sin via the companion system") {
  // y'' + y = 0, y(0) = 0, y'(0) = 1  ->  y = sin t
  const Polynomial a_coeffs[] = {Polynomial(), Polynomial::constant(1.0)};
  const double y0[] = {0.0, 1.0};
  const DenseSolution sol = integrate_scalar_ode(a_coeffs, y0, 0.0, 7.0, {});

  for (double t : {0.5, 2.0, 4.5, 6.9}) {
    CHECK(sol.eval(t, 1) == doctest::Approx(std::sin(t)).epsilon(1e-9));
    CHECK(sol.eval(t, 2) == doctest::Approx(std::cos(t)).epsilon(1e-9));
  }

  // interior zeros at pi and 2 pi
  const ZeroCountReport report = count_sign_changes(sol, 1, 0.5, 7.0, 1e-9);
  REQUIRE(report.count == 2);
  CHECK(report.locations[0] == doctest::Approx(std::numbers::pi).epsilon(1e-10));
  CHECK(report.locations[1] == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-10));
  CHECK(report.suspects.empty());
  CHECK_FALSE(report.near_tangency[0]);
  CHECK_FALSE(report.near_tangency[1]);
}

TEST_CASE("zero at the scan endpoint is reported, counted or flagged") {
  // on (0, 2pi] the zero at 2pi sits exactly at the endpoint: it appears
  // either as a counted crossing or as a near-tangency suspect, depending on
  // the sign of the last numeric sample
  const Polynomial a_coeffs[] = {Polynomial(), Polynomial::constant(1.0)};
  const double y0[] = {0.0, 1.0};
  const DenseSolution sol = integrate_scalar_ode(a_coeffs, y0, 0.0, 2.0 * std::numbers::pi, {});
  const ZeroCountReport report =
      count_sign_changes(sol, 1, 1e-6, 2.0 * std::numbers::pi, 1e-9);
  const bool endpoint_flagged =
      !report.suspects.empty() &&
      std::abs(report.suspects.back() - 2.0 * std::numbers::pi) < 1e-3;
  const bool endpoint_counted =
      report.count == 2 &&
      std::abs(report.locations.back() - 2.0 * std::numbers::pi) < 1e-3;
  CHECK(report.count >= 1);
  CHECK(report.locations[0] == doctest::Approx(std::numbers::pi).epsilon(1e-9));
  CHECK((endpoint_flagged || endpoint_counted));
}

TEST_CASE("first-order equations never vanish") {
  const Polynomial a_coeffs[] = {Polynomial({0.3, 0.5})};  // y' + (0.3 + 0.5 t) y = 0
  const double y0[] = {1.0};
  const DenseSolution sol = integrate_scalar_ode(a_coeffs, y0, -1.0, 1.0, {});
  const ZeroCountReport report = count_sign_changes(sol, 1, -1.0, 1.0, 1e-12);
  CHECK(report.count == 0);
  CHECK(report.suspects.empty());
}

TEST_CASE("airy-type equation respects the zero-count bound") {
  // y'' + t y = 0 with sup|t| = 1 = C on [-1,1]
  const Polynomial a_coeffs[] = {Polynomial(), Polynomial({0.0, 1.0})};
  const double y0[] = {1.0, 0.0};
  const DenseSolution sol = integrate_scalar_ode(a_coeffs, y0, -1.0, 1.0, {});
  const ZeroCountReport report = count_sign_changes(sol, 1, -1.0, 1.0, 1e-12);
  CHECK(static_cast<double>(report.count) <= scalar_zero_bound({2, 1.0, -1.0, 1.0}) + 1e-12);
}

TEST_CASE("numeric solution matches the closed form (d = 1)") {
  const CounterexampleSpec spec = make_counterexample({0.0}, 0.01);
  const LinearSystem sys = build_system(spec);
  const ClosedFormState init = closed_form(spec, -1.0);
  const double x0[] = {init.phi1, init.phi2};
  const DenseSolution sol = integrate_linear(sys, x0, -1.0, 1.0, {});

  for (int i = 0; i <= 100; ++i) {
    const double t = -1.0 + 2.0 * i / 100.0;
    const ClosedFormState exact = closed_form(spec, t);
    const double scale = std::max(std::abs(exact.phi1), std::abs(exact.phi2));
    CHECK(std::abs(sol.eval(t, 1) - exact.phi1) <= 1e-8 * scale);
    CHECK(std::abs(sol.eval(t, 2) - exact.phi2) <= 1e-8 * scale);
  }
}

TEST_CASE("counterexample d = 5: numeric zeros sit on the nodes") {
  const CounterexampleSpec spec = make_counterexample(chebyshev_nodes(5), 0.01);
  const LinearSystem sys = build_system(spec);
  const ClosedFormState init = closed_form(spec, -1.0);
  const double x0[] = {init.phi1, init.phi2};
  IntegratorConfig tight;
  tight.rtol = 1e-12;
  tight.atol = 1e-14;
  const DenseSolution sol = integrate_linear(sys, x0, -1.0, 1.0, tight);
  const ZeroCountReport report = count_sign_changes(sol, 2, -1.0, 1.0, 1e-12);
  REQUIRE(report.count == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(report.locations[i] == doctest::Approx(spec.nodes[i]).epsilon(1e-8));
  }
  CHECK(report.count == certified_zero_count(spec, -1.0, 1.0));
}

TEST_CASE("constant-positive component: no zeros, no flags") {
  const double x0[] = {1.0, 2.0};
  const DenseSolution sol = integrate_linear(zero_system(-1.0, 1.0), x0, -1.0, 1.0, {});
  const ZeroCountReport report = count_sign_changes(sol, 1, -1.0, 1.0, 1e-12);
  CHECK(report.count == 0);
  CHECK(report.locations.empty());
  CHECK(report.suspects.empty());
}

TEST_CASE("refine_zero") {
  SUBCASE("sin bracket around pi") {
    const Polynomial a_coeffs[] = {Polynomial(), Polynomial::constant(1.0)};
    const double y0[] = {0.0, 1.0};
    const DenseSolution sol = integrate_scalar_ode(a_coeffs, y0, 0.0, 4.0, {});
    CHECK(refine_zero(sol, 1, 3.0, 3.3) == doctest::Approx(std::numbers::pi).epsilon(1e-10));
    CHECK_THROWS_AS(refine_zero(sol, 1, 0.5, 1.5), std::invalid_argument);  // same sign
  }

  SUBCASE("linear solution crosses at an exactly representable point") {
    // y'' = 0 with y(0) = -0.25, y'(0) = 1: y = t - 0.25, zero at 0.25
    const Polynomial a_coeffs[] = {Polynomial(), Polynomial()};
    const double y0[] = {-0.25, 1.0};
    const DenseSolution sol = integrate_scalar_ode(a_coeffs, y0, 0.0, 1.0, {});
    CHECK(refine_zero(sol, 1, 0.1, 0.4) == doctest::Approx(0.25).epsilon(1e-11));
  }

  SUBCASE("counterexample d = 1: node at zero") {
    const CounterexampleSpec spec = make_counterexample({0.0}, 0.01);
    const ClosedFormState init = closed_form(spec, -1.0);
    const double x0[] = {init.phi1, init.phi2};
    const DenseSolution sol = integrate_linear(build_system(spec), x0, -1.0, 1.0, {});
    CHECK(std::abs(refine_zero(sol, 2, -0.2, 0.3)) <= 1e-10);
  }
}

TEST_CASE("linearity: scaling the initial state scales the solution") {
  const CounterexampleSpec spec = make_counterexample({-0.5, 0.5}, 0.01);
  const LinearSystem sys = build_system(spec);
  IntegratorConfig config;
  config.atol = 1e-14;
  const ClosedFormState init = closed_form(spec, -1.0);

  const double base[] = {init.phi1, init.phi2};
  const DenseSolution ref = integrate_linear(sys, base, -1.0, 1.0, config);
  const ZeroCountReport ref_count = count_sign_changes(ref, 2, -1.0, 1.0, 0.0);

  for (double c : {1e-3, 1.0, 1e3}) {
    const double scaled[] = {c * init.phi1, c * init.phi2};
    const DenseSolution sol = integrate_linear(sys, scaled, -1.0, 1.0, config);
    for (int i = 0; i <= 50; ++i) {
      const double t = -1.0 + 2.0 * i / 50.0;
      const double expect = c * ref.eval(t, 1);
      CHECK(std::abs(sol.eval(t, 1) - expect) <= config.rtol * 10.0 * std::abs(expect));
    }
    const ZeroCountReport count = count_sign_changes(sol, 2, -1.0, 1.0, 0.0);
    CHECK(count.count == ref_count.count);
  }
}

TEST_CASE("halving the tolerances does not change the count") {
  const CounterexampleSpec spec = make_counterexample(chebyshev_nodes(3), 0.01);
  const LinearSystem sys = build_system(spec);
  const ClosedFormState init = closed_form(spec, -1.0);
  const double x0[] = {init.phi1, init.phi2};

  IntegratorConfig coarse, fine;
  fine.rtol = coarse.rtol / 2.0;
  fine.atol = coarse.atol / 2.0;
  const auto count = [&](const IntegratorConfig& cfg) {
    return count_sign_changes(integrate_linear(sys, x0, -1.0, 1.0, cfg), 2, -1.0, 1.0, 1e-12)
        .count;
  };
  CHECK(count(coarse) == count(fine));
}

TEST_CASE("companion state: component 2 is the derivative of component 1") {
  const Polynomial a_coeffs[] = {Polynomial({0.1, 0.2}), Polynomial({0.5, 0.0, -0.4})};
  const double y0[] = {0.7, -0.3};
  const DenseSolution sol = integrate_scalar_ode(a_coeffs, y0, -1.0, 1.0, {});
  const double h = 1e-5;
  for (double t : {-0.8, -0.2, 0.4, 0.9}) {
    const double fd = (sol.eval(t + h, 1) - sol.eval(t - h, 1)) / (2.0 * h);
    CHECK(fd == doctest::Approx(sol.eval(t, 2)).epsilon(1e-4));
  }
}

TEST_CASE("argument validation") {
  const double x0[] = {1.0, 2.0};
  const LinearSystem sys = zero_system(-1.0, 1.0);
  const double short_x0[] = {1.0};
  CHECK_THROWS_AS(integrate_linear(sys, short_x0, -1.0, 1.0, {}), std::invalid_argument);
  CHECK_THROWS_AS(integrate_linear(sys, x0, -2.0, 1.0, {}), std::invalid_argument);
  CHECK_THROWS_AS(integrate_linear(sys, x0, 1.0, -1.0, {}), std::invalid_argument);

  IntegratorConfig bad;
  bad.rtol = 0.0;
  CHECK_THROWS_AS(integrate_linear(sys, x0, -1.0, 1.0, bad), std::invalid_argument);
  bad = {};
  bad.initial_step = 1.0;  // > max_step
  CHECK_THROWS_AS(integrate_linear(sys, x0, -1.0, 1.0, bad), std::invalid_argument);

  const DenseSolution sol = integrate_linear(sys, x0, -1.0, 1.0, {});
  CHECK_THROWS_AS(sol.eval(0.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(sol.eval(2.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(count_sign_changes(sol, 1, -2.0, 1.0, 1e-12), std::invalid_argument);
  CHECK_THROWS_AS(count_sign_changes(sol, 1, -1.0, 1.0, -1.0), std::invalid_argument);

  const Polynomial none[] = {};
  const double empty_y0[] = {};
  CHECK_THROWS_AS(integrate_scalar_ode({none, std::size_t{0}}, {empty_y0, std::size_t{0}},
                                       -1.0, 1.0, IntegratorConfig{}),
                  std::invalid_argument);
}
