#include <doctest.h>

#include <cmath>

#include "radspec/analysis.hpp"
#include "radspec/frobenius.hpp"
#include "radspec/ritz.hpp"

namespace an = radspec::analysis;
namespace fb = radspec::frobenius;
using radspec::ModelParams;

TEST_CASE("expectations of the oscillator ground state") {
  // R = sqrt(2) e^{-xi^2/2}, so <xi> = 2 M(2) and <1/xi> = 2 M(0).
  const auto sol = fb::solutions_in_a(0, 0.0, 0.0).at(0);
  const auto r = fb::polynomial_radial_function(sol).normalized();
  CHECK(an::expectation(r, an::Observable::Xi) ==
        doctest::Approx(std::sqrt(M_PI) / 2).epsilon(1e-12));
  CHECK(an::expectation(r, an::Observable::InverseXi) ==
        doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
  CHECK_THROWS_AS(an::expectation(fb::polynomial_radial_function(sol),
                                  an::Observable::Xi),
                  radspec::InvalidArgument);
}

TEST_CASE("moment expectations agree with quadrature") {
  const auto res = radspec::ritz::spectrum({0.5, 2.0, 1.0}, 3, 1e-12);
  for (int nu = 0; nu < 3; ++nu) {
    const auto r = res.radial_function(nu);
    CHECK(an::expectation(r, an::Observable::Xi) ==
          doctest::Approx(res.mean_xi[nu]).epsilon(1e-9));
    CHECK(an::expectation(r, an::Observable::InverseXi) ==
          doctest::Approx(res.mean_inverse_xi[nu]).epsilon(1e-9));
  }
}

TEST_CASE("Hellmann-Feynman slopes") {
  SUBCASE("oscillator limit") {
    const auto rep = an::hellmann_feynman_check({0.0, 0.0, 0.0}, 0, 1e-4);
    CHECK(rep.dW_da == doctest::Approx(-std::sqrt(M_PI)).epsilon(1e-7));
    CHECK(rep.dW_db == doctest::Approx(std::sqrt(M_PI) / 2).epsilon(1e-7));
  }
  SUBCASE("Coulomb plus linear, two levels") {
    for (int nu : {0, 1}) {
      const auto rep = an::hellmann_feynman_check({0.0, 2.0, 1.0}, nu, 1e-4);
      CHECK(rep.mismatch_a <= 1e-6);
      CHECK(rep.mismatch_b <= 1e-6);
      CHECK(rep.dW_da < 0.0);
      CHECK(rep.dW_db > 0.0);
      CHECK_FALSE(rep.crossing_suspected);
    }
  }
}

TEST_CASE("Coulomb asymptote") {
  const auto rep = an::asymptote_check(0.0, 1.0, 0, {5.250535221, 20.0, 50.0});
  REQUIRE(rep.points.size() == 3);
  CHECK(rep.points[0].ratio == doctest::Approx(0.9912).epsilon(1e-3));
  CHECK(rep.points[2].deviation < 5e-3);
  CHECK(rep.deviation_decreasing);
  for (const auto& pt : rep.points) CHECK(pt.converged);

  const auto excited = an::asymptote_check(0.0, 1.0, 1, {10.0, 20.0, 50.0});
  CHECK(excited.deviation_decreasing);
  CHECK(excited.points.back().deviation < 0.02);
}

TEST_CASE("curve scan with truncation overlay") {
  an::ScanOptions opts;
  opts.max_n = 2;
  opts.workers = 1;
  const auto scan = an::curve_scan(0.0, 1.0, -3.0, 6.0, 7, 3, opts);
  REQUIRE(scan.branches.size() == 3);
  CHECK(scan.failures.empty());
  CHECK(scan.branches_decreasing);
  for (const auto& branch : scan.branches) {
    CHECK(branch.size() == 7);
    for (std::size_t k = 1; k < branch.size(); ++k) {
      CHECK(branch[k] < branch[k - 1]);
    }
  }
  // Levels are ordered at every a.
  for (std::size_t k = 0; k < 7; ++k) {
    CHECK(scan.branches[0][k] < scan.branches[1][k]);
    CHECK(scan.branches[1][k] < scan.branches[2][k]);
  }
  CHECK(scan.truncation_points.size() == 1 + 2 + 3);
  for (const auto& pt : scan.truncation_points) {
    CHECK(pt.nu == pt.root_index - 1);
    CHECK(pt.on_branch);
    CHECK(pt.deviation <= 1e-6);
  }
}

TEST_CASE("single-point scan reproduces the spectrum") {
  an::ScanOptions opts;
  opts.max_n = 0;
  opts.workers = 1;
  const auto scan = an::curve_scan(0.0, 1.0, 2.0, 2.0, 1, 2, opts);
  REQUIRE(scan.a_values.size() == 1);
  CHECK(scan.a_values[0] == 2.0);
  CHECK(std::abs(scan.branches[0][0] + 3.230518994) <= 1e-8);
  CHECK(std::abs(scan.branches[1][0] - 4.510929109) <= 1e-8);
}

TEST_CASE("b curves") {
  const auto curves = an::b_curves(1, 0.0, -2.0, 2.0, 5);
  REQUIRE(curves.roots.size() == 5);
  CHECK(curves.roots[2].size() == 2);
  CHECK(curves.roots[2][1] == doctest::Approx(2.0 * std::sqrt(6.0) / 3.0));
}

TEST_CASE("eigenfunction profiles") {
  const auto grid = an::linspace(0.0, 6.0, 601);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 6.0);
  const auto prof = an::eigenfunction_profile({0.0, 0.0, 0.0}, {0, 1, 2}, grid);
  REQUIRE(prof.values.size() == 3);
  CHECK(prof.nodes == std::vector<int>{0, 1, 2});
  for (std::size_t k = 0; k < grid.size(); k += 50) {
    const double xi = grid[k];
    CHECK(prof.values[0][k] ==
          doctest::Approx(2.0 * xi * std::exp(-xi * xi)).epsilon(1e-9));
  }
  // xi R^2 integrates to one.
  double sum = 0.0;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    sum += 0.5 * (prof.values[1][k] + prof.values[1][k - 1]) * (grid[k] - grid[k - 1]);
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("exact solutions sit on the branch of their root index") {
  for (int n = 0; n <= 3; ++n) {
    for (double g : {0.0, 1.0}) {
      for (const auto& sol : fb::solutions_in_a(n, g, 1.0)) {
        const auto pl = an::placement(sol, n + 2);
        CHECK(pl.expected_nu == sol.root_index - 1);
        CHECK(pl.matched_nu == pl.expected_nu);
        CHECK(pl.deviation <= 1e-6);
        CHECK(pl.nearest_other > 1e-3);
      }
    }
  }
}

TEST_CASE("published table parameters lie on their branches") {
  const auto sols = fb::solutions_in_a(2, 0.0, 1.0);
  REQUIRE(sols.size() == 3);
  const auto res = radspec::ritz::spectrum(sols[1].params, 3, 1e-10);
  CHECK(std::abs(res.eigenvalues[1] - 5.75) <= 1e-8);
  // Away from a root, no level equals the truncation energy.
  const auto off = radspec::ritz::spectrum({0.0, 2.0, 1.0}, 6, 1e-10);
  for (double w : off.eigenvalues) CHECK(std::abs(w - 5.75) > 1e-2);
}

TEST_CASE("linspace") {
  CHECK(an::linspace(1.0, 2.0, 1) == std::vector<double>{1.0});
  CHECK(an::linspace(0.0, 1.0, 3) == std::vector<double>{0.0, 0.5, 1.0});
  CHECK_THROWS_AS(an::linspace(0.0, 1.0, 0), radspec::InvalidArgument);
}
