#include <doctest.h>

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numeric>

#include "radspec/frobenius.hpp"

namespace fb = radspec::frobenius;
using radspec::ModelParams;

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Independent exact evaluation of the recurrence for rational inputs.
std::vector<Rational> exact_series(Rational g, Rational a, Rational b,
                                   Rational w, int jmax) {
  std::vector<Rational> c(jmax + 2, Rational(0));  // c[k] holds c_{k-1}
  c[1] = 1;
  for (int j = -1; j + 2 <= jmax; ++j) {
    const Rational den = Rational(j + 2) * (2 * g + j + 2);
    const Rational first = (b * (2 * g + 2 * j + 3) - 2 * a) / (2 * den);
    const Rational second = (4 * (2 * g + 2 * j - w + 2) - b * b) / (4 * den);
    c[j + 3] = first * c[j + 2] + second * c[j + 1];
  }
  return {c.begin() + 1, c.end()};
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

TEST_CASE("pure oscillator ground state terminates at n = 0") {
  const auto s = fb::series_coefficients({0.0, 0.0, 0.0}, 2.0, 3);
  REQUIRE(s.c.size() == 4);
  CHECK(s.c[0] == 1.0);
  CHECK(s.c[1] == 0.0);
  CHECK(s.c[2] == 0.0);
  CHECK(s.c[3] == 0.0);
}

TEST_CASE("published third root truncates the series at W = 5.75") {
  const auto s = fb::series_coefficients({0.0, 5.250535221, 1.0}, 5.75, 4);
  CHECK(std::abs(s.c[3]) < 1e-9);
  CHECK(std::abs(s.c[4]) < 1e-9);
}

TEST_CASE("recurrence matches exact rational arithmetic") {
  const auto s = fb::series_coefficients({1.0, 1.0, 1.0}, 3.0, 6);
  const auto exact = exact_series(1, 1, 1, 3, 6);
  REQUIRE(s.c.size() == exact.size());
  for (std::size_t j = 0; j < exact.size(); ++j) {
    const double e = static_cast<double>(exact[j]);
    CHECK(s.c[j] == doctest::Approx(e).epsilon(1e-14));
  }
  // Spot value worked by hand: c_1 = (b(2g+1) - 2a) / (2(2g+1)) = 1/6.
  CHECK(exact[1] == Rational(1, 6));
}

TEST_CASE("truncation energy") {
  CHECK(fb::truncation_energy(2, 0.0, 1.0) == 5.75);
  CHECK(fb::truncation_energy(0, 0.0, 0.0) == 2.0);
  CHECK(fb::truncation_energy(1, 0.5, 2.0) == 4.0);
  CHECK_THROWS_AS(fb::truncation_energy(-1, 0.0, 0.0), radspec::InvalidArgument);
  CHECK_THROWS_AS(fb::truncation_energy(1, -1.0, 0.0), radspec::InvalidArgument);
}

TEST_CASE("n = 2 truncation polynomial is the published cubic") {
  const auto p = fb::truncation_polynomial_in_a(2, 0.0, 1.0);
  REQUIRE(p.degree() == 3);
  const double k = 4.0 / p.coefficient(3);
  CHECK(k * p.coefficient(2) == doctest::Approx(-18.0).epsilon(1e-13));
  CHECK(k * p.coefficient(1) == doctest::Approx(-25.0).epsilon(1e-13));
  CHECK(k * p.coefficient(0) == doctest::Approx(48.5).epsilon(1e-13));

  // General gamma, b against the closed-form coefficients.
  for (double g : {0.0, 0.5, 1.0, 2.0}) {
    for (double b : {-2.0, 0.5, 1.5}) {
      const auto q = fb::truncation_polynomial_in_a(2, g, b);
      const double s = 4.0 / q.coefficient(3);
      CHECK(s * q.coefficient(2) ==
            doctest::Approx(-6.0 * b * (2 * g + 3)).epsilon(1e-12));
      CHECK(s * q.coefficient(1) ==
            doctest::Approx(b * b * (12 * g * g + 36 * g + 23) - 16 * (4 * g + 3))
                .epsilon(1e-12));
      CHECK(s * q.coefficient(0) ==
            doctest::Approx(-b * (2 * g + 1) *
                            (b * b * (2 * g + 3) * (2 * g + 5) - 16 * (4 * g + 7)) /
                            2)
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("n = 0 root is b(2 gamma + 1)/2") {
  for (double g : {0.0, 0.5, 3.0}) {
    for (double b : {-1.0, 0.0, 2.5}) {
      const auto r = fb::truncation_roots_a(0, g, b);
      REQUIRE(r.roots.size() == 1);
      CHECK(r.roots[0] == doctest::Approx(b * (2 * g + 1) / 2).epsilon(1e-14));
    }
  }
  const auto r = fb::truncation_roots_a(0, 0.0, 0.0);
  CHECK(r.roots[0] == 0.0);
}

TEST_CASE("roots in a reproduce the published table headers") {
  const auto r = fb::truncation_roots_a(2, 0.0, 1.0);
  REQUIRE(r.roots.size() == 3);
  CHECK(r.roots[0] == doctest::Approx(-1.940551663).epsilon(1e-9));
  CHECK(r.roots[1] == doctest::Approx(1.190016441).epsilon(1e-9));
  CHECK(r.roots[2] == doctest::Approx(5.250535221).epsilon(1e-9));
  CHECK(std::abs(r.roots[0] + r.roots[1] + r.roots[2] - 4.5) < 1e-10);
  CHECK(std::abs(r.roots[0] * r.roots[1] * r.roots[2] + 12.125) < 1e-10);
}

TEST_CASE("closed-form n = 1 roots in a") {
  for (double g : {0.0, 0.5, 1.0, 2.0}) {
    for (double b : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
      const auto r = fb::truncation_roots_a(1, g, b);
      REQUIRE(r.roots.size() == 2);
      const double disc = std::sqrt(b * b + 8 * (2 * g + 1));
      CHECK(std::abs(r.roots[0] - (2 * b * (g + 1) - disc) / 2) <= 1e-12);
      CHECK(std::abs(r.roots[1] - (2 * b * (g + 1) + disc) / 2) <= 1e-12);
    }
  }
}

TEST_CASE("closed-form n = 1 roots in b") {
  const auto r0 = fb::truncation_roots_b(1, 0.0, 0.0);
  REQUIRE(r0.roots.size() == 2);
  CHECK(r0.roots[0] == doctest::Approx(-2.0 * std::sqrt(6.0) / 3.0).epsilon(1e-13));
  CHECK(r0.roots[1] == doctest::Approx(2.0 * std::sqrt(6.0) / 3.0).epsilon(1e-13));

  for (double g : {0.0, 1.0, 2.5}) {
    for (double a : {-3.0, 0.0, 2.0}) {
      const auto r = fb::truncation_roots_b(1, g, a);
      REQUIRE(r.roots.size() == 2);
      const double root =
          std::sqrt(a * a + 2 * (2 * g + 3) * (2 * g + 1) * (2 * g + 1));
      const double den = (2 * g + 1) * (2 * g + 3);
      CHECK(r.roots[0] ==
            doctest::Approx(2 * (2 * a * (g + 1) - root) / den).epsilon(1e-12));
      CHECK(r.roots[1] ==
            doctest::Approx(2 * (2 * a * (g + 1) + root) / den).epsilon(1e-12));
    }
  }
}

TEST_CASE("n = 2 curves b(a) have three real branches") {
  for (double g : {0.0, 0.5, 1.0}) {
    for (int k = 0; k <= 40; ++k) {
      const double a = -10.0 + 0.5 * k;
      const auto r = fb::truncation_roots_b(2, g, a);
      CHECK(r.roots.size() == 3);
      CHECK(r.complex_excluded == 0);
      CHECK(std::is_sorted(r.roots.begin(), r.roots.end()));
    }
  }
}

TEST_CASE("Vieta sum for n = 3") {
  const auto r = fb::truncation_roots_a(3, 0.0, 1.0);
  REQUIRE(r.roots.size() == 4);
  const auto& c = r.polynomial.coefficients();
  const double sum = std::accumulate(r.roots.begin(), r.roots.end(), 0.0);
  const double product = r.roots[0] * r.roots[1] * r.roots[2] * r.roots[3];
  CHECK(sum == doctest::Approx(-c[3] / c[4]).epsilon(1e-10));
  CHECK(product == doctest::Approx(c[0] / c[4]).epsilon(1e-10));
}

TEST_CASE("truncation polynomial degree is n + 1") {
  for (int n = 0; n <= 8; ++n) {
    for (double g : {0.0, 0.5, 1.0}) {
      CHECK(fb::truncation_polynomial_in_a(n, g, 1.0).degree() == n + 1);
      CHECK(fb::truncation_polynomial_in_b(n, g, 2.0).degree() == n + 1);
    }
  }
}

TEST_CASE("truncated series stays terminated and all roots are real") {
  for (int n = 0; n <= 6; ++n) {
    for (double g : {0.0, 0.5, 1.0, 2.0}) {
      for (double b : {-1.0, 0.0, 1.0, 2.0}) {
        const auto sols = fb::solutions_in_a(n, g, b);
        CHECK(sols.size() == static_cast<std::size_t>(n + 1));
        for (const auto& sol : sols) {
          const auto ext = fb::series_coefficients(sol.params, sol.energy, n + 4);
          const double scale = max_abs(sol.coeffs);
          for (int j = n + 1; j <= n + 4; ++j) {
            CHECK(std::abs(ext.c[j]) <= 1e-10 * scale);
          }
          CHECK(sol.energy == 2.0 * (g + n + 1) - b * b / 4);
        }
      }
    }
  }
}

TEST_CASE("polynomial factor at root i has i - 1 positive zeros") {
  for (int n = 0; n <= 3; ++n) {
    for (double g : {0.0, 1.0}) {
      for (double b : {0.0, 1.0, 2.0}) {
        for (const auto& sol : fb::solutions_in_a(n, g, b)) {
          CHECK(fb::positive_zero_count(sol) == sol.root_index - 1);
        }
      }
    }
  }
}

TEST_CASE("polynomial radial functions") {
  SUBCASE("oscillator ground state has norm^2 = 1/2") {
    const auto sols = fb::solutions_in_a(0, 0.0, 0.0);
    REQUIRE(sols.size() == 1);
    const auto r = fb::polynomial_radial_function(sols[0]);
    CHECK(r.norm() * r.norm() == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(r(1.3) == doctest::Approx(std::exp(-0.5 * 1.69)).epsilon(1e-15));
    CHECK(r.normalized().norm() == 1.0);
  }
  SUBCASE("node counts on the n = 2, b = 1 roots") {
    const auto sols = fb::solutions_in_a(2, 0.0, 1.0);
    REQUIRE(sols.size() == 3);
    CHECK(fb::polynomial_radial_function(sols[0]).count_nodes() == 0);
    CHECK(fb::polynomial_radial_function(sols[1]).count_nodes() == 1);
    CHECK(fb::polynomial_radial_function(sols[2]).count_nodes() == 2);
  }
}

TEST_CASE("invalid arguments") {
  CHECK_THROWS_AS(fb::series_coefficients({0.0, 0.0, 0.0}, 1.0, -1),
                  radspec::InvalidArgument);
  CHECK_THROWS_AS(fb::series_coefficients({-1.0, 0.0, 0.0}, 1.0, 3),
                  radspec::InvalidArgument);
  CHECK_THROWS_AS(fb::truncation_roots_a(-2, 0.0, 1.0), radspec::InvalidArgument);
}
