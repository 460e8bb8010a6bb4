#include "radspec/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "parallel.hpp"
#include "radspec/format.hpp"
#include "radspec/quadrature.hpp"

namespace radspec::analysis {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double eigenvalue(const ModelParams& params, int nu, double target_tol) {
  return ritz::spectrum(params, nu + 1, target_tol).eigenvalues[nu];
}

}  // namespace

std::vector<double> linspace(double lo, double hi, int points) {
  if (points < 1) {
    throw InvalidArgument("grid needs at least one point");
  }
  std::vector<double> out(points);
  for (int k = 0; k < points; ++k) {
    out[k] = points == 1 ? lo : lo + (hi - lo) * k / (points - 1);
  }
  return out;
}

double expectation(const RadialFunction& r, Observable observable) {
  if (std::abs(r.norm() - 1.0) > 1e-8) {
    throw InvalidArgument("expectation requires a normalized function (norm " +
                          format_number(r.norm()) + ")");
  }
  const double cut = r.cutoff();
  if (observable == Observable::InverseXi) {
    return integrate([&](double xi) { const double v = r(xi); return v * v; },
                     0.0, cut);
  }
  return integrate(
      [&](double xi) { const double v = r(xi); return v * v * xi * xi; }, 0.0,
      cut);
}

HellmannFeynmanReport hellmann_feynman_check(const ModelParams& params, int nu,
                                             double step, double target_tol) {
  validate(params);
  if (!(step > 0.0)) {
    throw InvalidArgument("finite-difference step must be > 0");
  }
  HellmannFeynmanReport rep;
  rep.params = params;
  rep.nu = nu;
  rep.step = step;

  const int count = nu + 2;
  const ritz::SpectrumResult center = ritz::spectrum(params, count, target_tol);
  auto shifted = [&](double da, double db) {
    return ritz::spectrum({params.gamma, params.a + da, params.b + db}, count,
                          target_tol)
        .eigenvalues;
  };
  const auto ap = shifted(step, 0.0);
  const auto am = shifted(-step, 0.0);
  const auto bp = shifted(0.0, step);
  const auto bm = shifted(0.0, -step);
  rep.dW_da = (ap[nu] - am[nu]) / (2.0 * step);
  rep.dW_db = (bp[nu] - bm[nu]) / (2.0 * step);

  const RadialFunction r = center.radial_function(nu);
  const double inv = expectation(r, Observable::InverseXi);
  rep.mean_xi = expectation(r, Observable::Xi);
  rep.minus_mean_inverse_xi = -inv;
  rep.mismatch_a = std::abs(rep.dW_da + inv) / std::abs(inv);
  rep.mismatch_b = std::abs(rep.dW_db - rep.mean_xi) / std::abs(rep.mean_xi);

  // An avoided or true crossing inside the stencil shows up as a change
  // comparable to the gap to the neighbouring levels.
  const auto& w = center.eigenvalues;
  double gap = w[nu + 1] - w[nu];
  if (nu > 0) {
    gap = std::min(gap, w[nu] - w[nu - 1]);
  }
  const double change = std::max({std::abs(ap[nu] - am[nu]),
                                  std::abs(bp[nu] - bm[nu])});
  rep.crossing_suspected = change > 0.5 * gap;
  return rep;
}

AsymptoteReport asymptote_check(double gamma, double b, int nu,
                                const std::vector<double>& a_values,
                                double target_tol) {
  if (!std::is_sorted(a_values.begin(), a_values.end())) {
    throw InvalidArgument("a_values must be increasing");
  }
  AsymptoteReport rep{gamma, b, nu, {}, false};
  const double denom = std::pow(2.0 * nu + 2.0 * gamma + 1.0, 2);
  rep.points.resize(a_values.size());
  detail::parallel_for(a_values.size(), 0, [&](std::size_t k) {
    const double a = a_values[k];
    // Relative tolerance: |W| grows like a^2.
    const double tol = target_tol * std::max(1.0, a * a / denom);
    const auto res = ritz::spectrum({gamma, a, b}, nu + 1, tol);
    AsymptotePoint& p = rep.points[k];
    p.a = a;
    p.energy = res.eigenvalues[nu];
    p.ratio = p.energy * denom / (-a * a);
    p.deviation = std::abs(p.ratio - 1.0);
    p.converged = res.converged;
  });
  rep.deviation_decreasing = true;
  for (std::size_t k = 1; k < rep.points.size(); ++k) {
    if (!(rep.points[k].deviation < rep.points[k - 1].deviation)) {
      rep.deviation_decreasing = false;
    }
  }
  return rep;
}

std::vector<OverlayPoint> truncation_overlay(double gamma, double b, int max_n,
                                             double overlay_tol,
                                             double target_tol) {
  std::vector<OverlayPoint> points;
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& sol : frobenius::solutions_in_a(n, gamma, b)) {
      OverlayPoint p;
      p.n = n;
      p.root_index = sol.root_index;
      p.a = sol.params.a;
      p.energy = sol.energy;
      p.nu = sol.root_index - 1;
      points.push_back(p);
    }
  }
  detail::parallel_for(points.size(), 0, [&](std::size_t k) {
    OverlayPoint& p = points[k];
    p.branch_energy = eigenvalue({gamma, p.a, b}, p.nu, target_tol);
    p.deviation = std::abs(p.branch_energy - p.energy);
    p.on_branch = p.deviation <= overlay_tol;
  });
  return points;
}

CurveScan curve_scan(double gamma, double b, double a_min, double a_max,
                     int points, int branches, const ScanOptions& options) {
  if (points < 1) {
    throw InvalidArgument("scan needs at least one point");
  }
  if (branches < 1) {
    throw InvalidArgument("scan needs at least one branch");
  }
  validate(ModelParams{gamma, a_min, b});
  validate(ModelParams{gamma, a_max, b});
  CurveScan scan;
  scan.gamma = gamma;
  scan.b = b;
  scan.a_values = linspace(a_min, a_max, points);
  scan.branches.assign(branches, std::vector<double>(points, kNaN));
  std::vector<std::string> errors(points);

  detail::parallel_for(points, options.workers, [&](std::size_t k) {
    try {
      const auto res = ritz::spectrum({gamma, scan.a_values[k], b}, branches,
                                      options.target_tol);
      for (int nu = 0; nu < branches; ++nu) {
        scan.branches[nu][k] = res.eigenvalues[nu];
      }
    } catch (const Error& e) {
      errors[k] = "a=" + format_number(scan.a_values[k]) + ": " + e.what();
    }
  });
  for (auto& e : errors) {
    if (!e.empty()) {
      scan.failures.push_back(std::move(e));
    }
  }

  scan.branches_decreasing = true;
  for (const auto& branch : scan.branches) {
    double last = kNaN;
    for (double w : branch) {
      if (std::isnan(w)) {
        continue;
      }
      if (!std::isnan(last) && !(w < last)) {
        scan.branches_decreasing = false;
      }
      last = w;
    }
  }
  scan.truncation_points = truncation_overlay(
      gamma, b, options.max_n, options.overlay_tol, options.target_tol);
  return scan;
}

BCurves b_curves(int n, double gamma, double a_min, double a_max, int points) {
  BCurves out;
  out.n = n;
  out.gamma = gamma;
  out.a_values = linspace(a_min, a_max, points);
  out.roots.resize(points);
  for (int k = 0; k < points; ++k) {
    out.roots[k] = frobenius::truncation_roots_b(n, gamma, out.a_values[k]).roots;
  }
  return out;
}

std::vector<double> density_profile(const RadialFunction& r,
                                    const std::vector<double>& xi_grid) {
  std::vector<double> out;
  out.reserve(xi_grid.size());
  for (double xi : xi_grid) {
    const double v = r(xi);
    out.push_back(xi * v * v);
  }
  return out;
}

Profile eigenfunction_profile(const ModelParams& params,
                              const std::vector<int>& nus,
                              const std::vector<double>& xi_grid,
                              double target_tol) {
  if (nus.empty()) {
    throw InvalidArgument("no eigenfunction index requested");
  }
  const int top = *std::max_element(nus.begin(), nus.end());
  if (*std::min_element(nus.begin(), nus.end()) < 0) {
    throw InvalidArgument("eigenfunction index must be >= 0");
  }
  const auto res = ritz::spectrum(params, top + 1, target_tol);
  Profile out;
  out.params = params;
  out.nus = nus;
  out.xi = xi_grid;
  for (int nu : nus) {
    const RadialFunction r = res.radial_function(nu);
    out.values.push_back(density_profile(r, xi_grid));
    out.nodes.push_back(r.count_nodes());
  }
  return out;
}

Placement placement(const frobenius::TruncationSolution& sol, int count,
                    double target_tol) {
  Placement out;
  out.expected_nu = sol.root_index - 1;
  const auto res = ritz::spectrum(sol.params, std::max(count, sol.root_index),
                                  target_tol);
  out.eigenvalues = res.eigenvalues;
  double best = std::numeric_limits<double>::infinity();
  out.nearest_other = std::numeric_limits<double>::infinity();
  for (int nu = 0; nu < static_cast<int>(res.eigenvalues.size()); ++nu) {
    const double d = std::abs(res.eigenvalues[nu] - sol.energy);
    if (d < best) {
      best = d;
      out.matched_nu = nu;
    }
    if (nu == out.expected_nu) {
      out.deviation = d;
    } else {
      out.nearest_other = std::min(out.nearest_other, d);
    }
  }
  return out;
}

}  // namespace radspec::analysis
