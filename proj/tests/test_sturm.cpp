#include <doctest.h>

#include <stdexcept>
#include <string>

#include "corpus.hpp"
#include "oscilab/counterexample.hpp"
#include "oscilab/sturm.hpp"

using namespace oscilab;

TEST_CASE("no real roots") {
  CHECK(sturm_count(Polynomial({1.0, 0.0, 1.0}), -1.0, 1.0) == 0);  // t^2 + 1
  CHECK(sturm_count(Polynomial::constant(3.0), -1.0, 1.0) == 0);
}

TEST_CASE("interior simple roots are all counted") {
  const double roots[] = {-0.5, 0.0, 0.5};
  const Polynomial p = Polynomial::from_roots(roots, 1.0);
  CHECK(sturm_count(p, -1.0, 1.0) == 3);
  CHECK(sturm_count(p, -0.25, 1.0) == 2);
  CHECK(sturm_count(p, -1.0, -0.4) == 1);
}

TEST_CASE("repeated roots count once") {
  const double roots[] = {0.3, 0.3};
  CHECK(sturm_count(Polynomial::from_roots(roots, 1.0), -1.0, 1.0) == 1);
  const double mixed[] = {0.3, 0.3, -0.6};
  CHECK(sturm_count(Polynomial::from_roots(mixed, 1.0), -1.0, 1.0) == 2);
}

TEST_CASE("endpoint roots: shrink-inward convention excludes them") {
  const double at_hi[] = {1.0};
  CHECK(sturm_count(Polynomial::from_roots(at_hi, 1.0), -1.0, 1.0) == 0);
  const double at_lo[] = {-1.0};
  CHECK(sturm_count(Polynomial::from_roots(at_lo, 1.0), -1.0, 1.0) == 0);
  const double just_inside[] = {0.999999};
  CHECK(sturm_count(Polynomial::from_roots(just_inside, 1.0), -1.0, 1.0) == 1);
}

TEST_CASE("chebyshev-node polynomials through the faithful degree range") {
  for (int d : {1, 2, 5, 10, 20, 25}) {
    const Polynomial p = Polynomial::from_roots(chebyshev_nodes(d), 1.0);
    CHECK(sturm_count(p, -1.0, 1.0) == d);
  }
}

TEST_CASE("random separated corpus matches the grid-scan oracle") {
  // scaled-down version of the acceptance check (500 polys, 1e6 grid)
  SplitMix64 rng(555);
  for (int trial = 0; trial < 120; ++trial) {
    const auto [p, expected] = oscilab_test::random_separated_poly(rng);
    const int scan = oscilab_test::grid_scan_count(p, -1.0, 1.0, 200'001);
    const int sturm = sturm_count(p, -1.0, 1.0);
    CAPTURE(trial);
    CHECK(sturm == scan);
    CHECK(sturm == expected);
  }
}

TEST_CASE("scaling by a positive constant does not change counts") {
  SplitMix64 rng(556);
  for (int trial = 0; trial < 30; ++trial) {
    const auto [p, expected] = oscilab_test::random_separated_poly(rng);
    CHECK(sturm_count(p * 1e8, -1.0, 1.0) == expected);
    CHECK(sturm_count(p * 1e-8, -1.0, 1.0) == expected);
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(sturm_count(Polynomial(), -1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(sturm_count(Polynomial({0.0, 1.0}), 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(sturm_count(Polynomial({0.0, 1.0}), 2.0, -2.0), std::invalid_argument);
}
