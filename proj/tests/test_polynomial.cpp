#include <doctest.h>

#include "radspec/polynomial.hpp"

using radspec::Polynomial;

TEST_CASE("evaluation, derivative and degree") {
  const Polynomial p({1.0, -3.0, 0.0, 2.0, 0.0});
  CHECK(p.degree() == 3);
  CHECK(p(2.0) == doctest::Approx(1.0 - 6.0 + 16.0));
  CHECK(p.derivative()(2.0) == doctest::Approx(-3.0 + 24.0));
  CHECK(Polynomial({0.0, 0.0}).degree() == -1);
  CHECK(p.times_linear(1.0, 1.0)(2.0) == doctest::Approx(3.0 * p(2.0)));
}

TEST_CASE("real roots of a cubic with known roots") {
  // (x + 2)(x - 1)(x - 5)
  const Polynomial p({10.0, -7.0, -4.0, 1.0});
  const auto r = radspec::real_roots(p);
  REQUIRE(r.roots.size() == 3);
  CHECK(r.roots[0] == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(r.roots[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.roots[2] == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(r.complex_excluded == 0);
}

TEST_CASE("complex roots are excluded and counted") {
  // (x^2 + 1)(x - 3)
  const auto r = radspec::real_roots(Polynomial({-3.0, 1.0, -3.0, 1.0}));
  REQUIRE(r.roots.size() == 1);
  CHECK(r.roots[0] == doctest::Approx(3.0));
  CHECK(r.complex_excluded == 2);
}

TEST_CASE("repeated roots are reported with multiplicity, not merged") {
  // (x - 1)^2 (x + 1)
  const auto r = radspec::real_roots(Polynomial({1.0, -1.0, -1.0, 1.0}));
  REQUIRE(r.roots.size() == 3);
  CHECK(r.multiplicity[0] == 1);
  CHECK(r.multiplicity[1] == 2);
  CHECK(r.multiplicity[2] == 2);
}

TEST_CASE("zero polynomial is a root-finding error") {
  CHECK_THROWS_AS(radspec::real_roots(Polynomial({0.0})),
                  radspec::RootFindingError);
}
