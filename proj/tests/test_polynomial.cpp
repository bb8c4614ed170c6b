#include <doctest.h>

#include <stdexcept>
#include <string>

#include <cmath>
#include <random>

#include "oscilab/polynomial.hpp"

using oscilab::Polynomial;

TEST_CASE("eval is Horner on ascending coefficients") {
  const Polynomial t({0.0, 1.0});
  CHECK(t.eval(0.5) == 0.5);

  const Polynomial zero;
  CHECK(zero.eval(3.7) == 0.0);
  CHECK(zero.is_zero());

  // root placed by construction; exact in binary arithmetic
  const Polynomial p({-0.25, 0.0, 1.0});
  CHECK(p.eval(0.5) == 0.0);
  CHECK(p.eval(-0.5) == 0.0);
}

TEST_CASE("derivative shifts and scales") {
  CHECK(Polynomial({0.0, 1.0}).derivative() == Polynomial({1.0}));
  CHECK(Polynomial({0.0, 0.0, 0.0, 1.0}).derivative() == Polynomial({0.0, 0.0, 3.0}));

  // (t^2 - 0.25)' = 2t, expanded by hand
  const double roots[] = {-0.5, 0.5};
  CHECK(Polynomial::from_roots(roots, 1.0).derivative() == Polynomial({0.0, 2.0}));

  CHECK(Polynomial::constant(4.0).derivative().is_zero());
  CHECK(Polynomial({0.0, 1.0}).degree() == 1);
  CHECK(Polynomial({0.0, 1.0}).derivative().degree() == 0);
}

TEST_CASE("antiderivative is normalized to P(0) = 0") {
  CHECK(Polynomial({1.0}).antiderivative() == Polynomial({0.0, 1.0}));
  CHECK(Polynomial({0.0, 2.0}).antiderivative() == Polynomial({0.0, 0.0, 1.0}));
  // 3t^2 - 1 -> t^3 - t, checked coefficient-wise
  CHECK(Polynomial({-1.0, 0.0, 3.0}).antiderivative() == Polynomial({0.0, -1.0, 0.0, 1.0}));
  CHECK(Polynomial().antiderivative().is_zero());
}

TEST_CASE("derivative of antiderivative returns the input") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coeff(-10.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> c(1 + rng() % 9);
    for (double& x : c) x = coeff(rng);
    const Polynomial p{std::vector<double>(c)};
    CHECK(approx_equal(p.antiderivative().derivative(), p, 1e-15));
  }
}

TEST_CASE("from_roots expands the product form") {
  const double single[] = {0.0};
  CHECK(Polynomial::from_roots(single, 1.0) == Polynomial({0.0, 1.0}));

  const double pair[] = {-0.5, 0.5};
  CHECK(Polynomial::from_roots(pair, 1.0) == Polynomial({-0.25, 0.0, 1.0}));

  const double repeated[] = {0.0, 0.0};
  CHECK(Polynomial::from_roots(repeated, 2.0) == Polynomial({0.0, 0.0, 2.0}));

  // empty roots: constant scale, documented non-error
  CHECK(Polynomial::from_roots({}, 3.5) == Polynomial::constant(3.5));

  CHECK(Polynomial::from_roots(pair, 1.0).degree() == 2);
}

TEST_CASE("from_roots residual at each root stays near zero") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> in_unit(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> roots(1 + rng() % 8);
    for (double& r : roots) r = in_unit(rng);
    const Polynomial p = Polynomial::from_roots(roots, 1.0);
    double coeff_sum = 0.0;
    for (double c : p.coeffs()) coeff_sum += std::abs(c);
    for (double r : roots) {
      CHECK(std::abs(p.eval(r)) <= 1e-12 * (1.0 + coeff_sum));
    }
  }
}

TEST_CASE("canonical form trims trailing zeros") {
  CHECK(Polynomial({1.0, 2.0, 0.0, 0.0}) == Polynomial({1.0, 2.0}));
  CHECK(Polynomial({0.0, 0.0}).is_zero());
  const Polynomial diff = Polynomial({1.0, 1.0}) - Polynomial({0.0, 1.0});
  CHECK(diff.degree() == 0);
  CHECK(diff == Polynomial::constant(1.0));
}

TEST_CASE("arithmetic") {
  const Polynomial t({0.0, 1.0});
  CHECK(t * t == Polynomial({0.0, 0.0, 1.0}));
  CHECK((t + Polynomial::constant(1.0)) * (t - Polynomial::constant(1.0)) ==
        Polynomial({-1.0, 0.0, 1.0}));
  CHECK(t * 3.0 == Polynomial({0.0, 3.0}));
  CHECK((Polynomial() * t).is_zero());
}

TEST_CASE("approx_equal scales the tolerance by the largest coefficient") {
  const Polynomial p({1e6, 2e6});
  const Polynomial q({1e6 + 1e-7, 2e6});
  CHECK(approx_equal(p, q));  // 1e-7 <= 1e-12 * 2e6
  CHECK(!approx_equal(p, Polynomial({1e6 + 1.0, 2e6})));
  CHECK(approx_equal(Polynomial(), Polynomial()));
  CHECK(!approx_equal(Polynomial(), Polynomial::constant(1.0)));
}

TEST_CASE("non-finite inputs are rejected") {
  CHECK_THROWS_AS(Polynomial({1.0, std::nan("")}), std::invalid_argument);
  const double bad[] = {std::numeric_limits<double>::infinity()};
  CHECK_THROWS_AS(Polynomial::from_roots(bad, 1.0), std::invalid_argument);
}
