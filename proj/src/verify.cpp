#include "radspec/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "radspec/analysis.hpp"
#include "radspec/format.hpp"
#include "radspec/frobenius.hpp"
#include "radspec/oracle.hpp"
#include "radspec/ritz.hpp"

namespace radspec::verify {

const ReferenceBlock kReferenceTable[4] = {
    {-1.940551663,
     {5.75, 9.89404066, 14.06831985, 18.24977457, 22.4306056, 26.60791902}},
    {1.190016441,
     {-0.1664353619, 5.75, 10.52307155, 15.06421047, 19.4970504, 23.86537389}},
    {2.0,
     {-3.230518994, 4.510929109, 9.532275968, 14.1972814, 18.70978427,
      23.13559322}},
    {5.250535221,
     {-27.3245988, -0.5108147276, 5.75, 10.90599171, 15.71422948,
      20.34858964}},
};

const double kReferenceRoots[3] = {-1.940551663, 1.190016441, 5.250535221};

namespace {

constexpr double kGamma = 0.0;
constexpr double kB = 1.0;
constexpr double kTableTol = 1e-6;
constexpr double kSpectrumTol = 1e-10;

std::string fmt(double v) { return format_number(v); }

CheckResult make(std::string id, int criterion, double tolerance) {
  CheckResult r;
  r.id = std::move(id);
  r.criterion = criterion;
  r.tolerance = tolerance;
  return r;
}

}  // namespace

CheckResult check_table(const Options& options) {
  CheckResult r = make("table1", 1, kTableTol);
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream failed;
  int failures = 0;
  for (const auto& block : kReferenceTable) {
    const auto res = ritz::spectrum(
        {kGamma, options.coulomb_sign * block.a, kB}, 6, kSpectrumTol);
    for (int nu = 0; nu < 6; ++nu) {
      const double dev = std::abs(res.eigenvalues[nu] - block.eigenvalues[nu]);
      r.measured = std::max(r.measured, dev);
      if (!(dev <= kTableTol)) {
        ++failures;
        failed << " a=" << fmt(block.a) << ",nu=" << nu
               << ": computed " << fmt(res.eigenvalues[nu]) << " published "
               << fmt(block.eigenvalues[nu]) << ";";
      }
    }
  }
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  const bool fast = seconds <= 30.0;
  r.pass = failures == 0 && fast;
  r.detail = std::to_string(24 - failures) + "/24 cells within tolerance";
  if (failures > 0) {
    r.detail += ";" + failed.str();
  }
  if (!fast) {
    r.detail += " runtime above 30 s";
  }
  return r;
}

CheckResult check_truncation_roots() {
  CheckResult r = make("truncation_roots", 2, 1e-8);
  const auto roots = frobenius::truncation_roots_a(2, kGamma, kB);
  const double w = frobenius::truncation_energy(2, kGamma, kB);
  bool ok = roots.roots.size() == 3 && w == 5.75;
  if (roots.roots.size() == 3) {
    for (int i = 0; i < 3; ++i) {
      r.measured =
          std::max(r.measured, std::abs(roots.roots[i] - kReferenceRoots[i]));
    }
    const double sum = roots.roots[0] + roots.roots[1] + roots.roots[2];
    const double product = roots.roots[0] * roots.roots[1] * roots.roots[2];
    const double vieta = std::max(std::abs(sum - 4.5), std::abs(product + 12.125));
    ok = ok && r.measured <= 1e-8 && vieta <= 1e-10;
    r.detail = "W=" + fmt(w) + " sum=" + fmt(sum) + " product=" + fmt(product) +
               " vieta_dev=" + fmt(vieta);
  } else {
    r.detail = "found " + std::to_string(roots.roots.size()) + " real roots";
  }
  r.pass = ok;
  return r;
}

CheckResult check_placement() {
  CheckResult r = make("placement", 3, 1e-6);
  bool ok = true;
  std::ostringstream detail;
  for (const auto& sol : frobenius::solutions_in_a(2, kGamma, kB)) {
    const auto p = analysis::placement(sol, 6, kSpectrumTol);
    r.measured = std::max(r.measured, p.deviation);
    const bool here = p.matched_nu == p.expected_nu && p.deviation <= 1e-6 &&
                      p.nearest_other > 1e-3;
    ok = ok && here;
    detail << "i=" << sol.root_index << ":nu=" << p.matched_nu
           << ",other_gap=" << fmt(p.nearest_other) << " ";
  }
  r.pass = ok;
  r.detail = detail.str();
  return r;
}

CheckResult check_exact_limit() {
  CheckResult r = make("exact_limit", 4, 1e-9);
  for (double gamma : {0.0, 0.5, 1.0, 2.0}) {
    const auto res = ritz::spectrum({gamma, 0.0, 0.0}, 6, 1e-11);
    for (int nu = 0; nu < 6; ++nu) {
      const double exact = 2.0 * (2.0 * nu + gamma + 1.0);
      r.measured = std::max(r.measured, std::abs(res.eigenvalues[nu] - exact));
    }
  }
  r.pass = r.measured <= r.tolerance;
  r.detail = "gamma in {0,0.5,1,2}, nu<=5";
  return r;
}

CheckResult check_oracle() {
  CheckResult r = make("oracle_equivalence", 5, 1e-4);
  const oracle::GridSpec grid{};
  for (const auto& block : kReferenceTable) {
    const ModelParams params{kGamma, block.a, kB};
    const auto rr = ritz::spectrum(params, 6, kSpectrumTol);
    const auto fd = oracle::fd_spectrum(params, grid, 6);
    for (int nu = 0; nu < 6; ++nu) {
      r.measured = std::max(r.measured,
                            std::abs(rr.eigenvalues[nu] - fd.eigenvalues[nu]));
    }
  }
  // Convergence order on the oscillator limit from two step sizes.
  const ModelParams oscillator{0.0, 0.0, 0.0};
  const auto coarse = oracle::fd_spectrum(oscillator, {12.0, 4000}, 3);
  const auto fine = oracle::fd_spectrum(oscillator, {12.0, 8000}, 3);
  double worst_order_dev = 0.0;
  std::ostringstream orders;
  for (int nu = 0; nu < 3; ++nu) {
    const double exact = 2.0 * (2.0 * nu + 1.0);
    const double order = oracle::observed_order(coarse.eigenvalues[nu] - exact,
                                                fine.eigenvalues[nu] - exact);
    worst_order_dev = std::max(worst_order_dev, std::abs(order - 2.0));
    orders << " " << fmt(order);
  }
  r.pass = r.measured <= r.tolerance && worst_order_dev <= 0.2;
  r.detail = "grid xi_max=" + fmt(grid.xi_max) + " points=" +
             std::to_string(grid.num_points) + "; observed orders" +
             orders.str();
  return r;
}

CheckResult check_hellmann_feynman() {
  CheckResult r = make("hellmann_feynman", 6, 1e-4);
  const auto rep = analysis::hellmann_feynman_check({kGamma, 2.0, kB}, 0, 1e-3);
  r.measured = std::max(rep.mismatch_a, rep.mismatch_b);
  r.pass = r.measured <= r.tolerance && rep.dW_da < 0.0 && rep.dW_db > 0.0 &&
           !rep.crossing_suspected;
  r.detail = "dW/da=" + fmt(rep.dW_da) + " -<1/xi>=" +
             fmt(rep.minus_mean_inverse_xi) + " dW/db=" + fmt(rep.dW_db) +
             " <xi>=" + fmt(rep.mean_xi);
  return r;
}

CheckResult check_asymptote() {
  CheckResult r = make("asymptote", 7, 0.005);
  const auto rep = analysis::asymptote_check(kGamma, kB, 0, {10.0, 20.0, 50.0});
  const double dev20 = rep.points[1].deviation;
  const double dev50 = rep.points[2].deviation;
  r.measured = dev50;
  r.pass = dev20 <= 0.02 && dev50 <= 0.005 && rep.deviation_decreasing;
  std::ostringstream detail;
  for (const auto& p : rep.points) {
    detail << "a=" << fmt(p.a) << ":ratio=" << fmt(p.ratio) << " ";
  }
  r.detail = detail.str();
  return r;
}

CheckResult check_eigenfunctions() {
  CheckResult r = make("eigenfunctions", 8, 1e-6);
  bool ok = true;
  std::ostringstream detail;
  for (const auto& sol : frobenius::solutions_in_a(2, kGamma, kB)) {
    const int nu = sol.root_index - 1;
    const RadialFunction exact =
        frobenius::polynomial_radial_function(sol).normalized().sign_aligned();
    const auto res = ritz::spectrum(sol.params, 6, 1e-11);
    const RadialFunction approx = res.radial_function(nu);
    const auto grid = analysis::linspace(0.0, exact.cutoff(), 1201);
    const auto pe = analysis::density_profile(exact, grid);
    const auto pa = analysis::density_profile(approx, grid);
    double sup = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      sup = std::max(sup, std::abs(pe[k] - pa[k]));
    }
    r.measured = std::max(r.measured, sup);
    const int nodes_exact = exact.count_nodes();
    const int nodes_approx = approx.count_nodes();
    ok = ok && sup <= 1e-6 && nodes_exact == nu && nodes_approx == nu;
    detail << "i=" << sol.root_index << ":nodes=" << nodes_approx << " ";
  }
  r.pass = ok;
  r.detail = detail.str();
  return r;
}

CheckResult check_figure_data() {
  CheckResult r = make("figure_data", 9, 1e-6);
  bool ok = true;
  std::ostringstream detail;
  // Curves b_{2,gamma}^{(i)}(a): three real branches at every grid point.
  for (double gamma : {0.0, 0.5, 1.0}) {
    const auto curves = analysis::b_curves(2, gamma, -10.0, 10.0, 41);
    for (const auto& roots : curves.roots) {
      ok = ok && roots.size() == 3;
    }
  }
  analysis::ScanOptions opts;
  opts.max_n = 4;
  opts.overlay_tol = 1e-6;
  opts.target_tol = kSpectrumTol;
  const auto scan = analysis::curve_scan(kGamma, kB, -3.0, 6.0, 10, 6, opts);
  int on = 0;
  for (const auto& p : scan.truncation_points) {
    r.measured = std::max(r.measured, p.deviation);
    on += p.on_branch ? 1 : 0;
  }
  ok = ok && on == static_cast<int>(scan.truncation_points.size()) &&
       scan.failures.empty() && scan.branches_decreasing;
  detail << on << "/" << scan.truncation_points.size()
         << " overlay points on their branch; branches "
         << (scan.branches_decreasing ? "decreasing" : "NOT decreasing");
  r.pass = ok;
  r.detail = detail.str();
  return r;
}

std::vector<CheckResult> run(const Options& options) {
  std::vector<CheckResult> out;
  out.push_back(check_table(options));
  if (!options.quick) {
    out.push_back(check_truncation_roots());
    out.push_back(check_placement());
  }
  out.push_back(check_exact_limit());
  if (!options.quick) {
    out.push_back(check_oracle());
    out.push_back(check_hellmann_feynman());
    out.push_back(check_asymptote());
    out.push_back(check_eigenfunctions());
    out.push_back(check_figure_data());
  }
  return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

io::OutputRecord report(const std::vector<CheckResult>& results,
                        const Options& options) {
  io::OutputRecord rec;
  rec.kind = io::RecordKind::VerifyReport;
  rec.add_metadata("mode", options.quick ? "quick" : "full");
  rec.add_metadata("spectrum_tol", kSpectrumTol);
  rec.add_metadata("status", all_pass(results) ? "pass" : "fail");
  rec.add_metadata("tool_version", io::kToolVersion);
  rec.columns = {"check", "criterion", "status", "measured", "tolerance",
                 "detail"};
  for (const auto& r : results) {
    rec.rows.push_back({r.id, static_cast<double>(r.criterion),
                        std::string(r.pass ? "pass" : "fail"), r.measured,
                        r.tolerance, r.detail});
  }
  return rec;
}

}  // namespace radspec::verify
