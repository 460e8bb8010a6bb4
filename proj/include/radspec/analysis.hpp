#pragma once

#include <string>
#include <vector>

#include "radspec/frobenius.hpp"
#include "radspec/model.hpp"
#include "radspec/radial_function.hpp"
#include "radspec/ritz.hpp"

namespace radspec::analysis {

enum class Observable { InverseXi, Xi };

/// <f> = int f(xi) R(xi)^2 xi dxi by adaptive quadrature. R must be
/// normalized (|norm - 1| <= 1e-8).
double expectation(const RadialFunction& r, Observable observable);

struct HellmannFeynmanReport {
  ModelParams params;
  int nu = 0;
  double step = 0.0;
  double dW_da = 0.0;            ///< central difference
  double dW_db = 0.0;
  double minus_mean_inverse_xi = 0.0;  ///< -<1/xi>
  double mean_xi = 0.0;                ///< <xi>
  double mismatch_a = 0.0;  ///< |dW/da + <1/xi>| / |<1/xi>|
  double mismatch_b = 0.0;  ///< |dW/db - <xi>| / |<xi>|
  bool crossing_suspected = false;
};

/// Compares central differences of W_nu in a and b with -<1/xi> and <xi>.
HellmannFeynmanReport hellmann_feynman_check(const ModelParams& params, int nu,
                                             double step,
                                             double target_tol = 1e-10);

struct AsymptotePoint {
  double a = 0.0;
  double energy = 0.0;
  double ratio = 0.0;      ///< W (2 nu + 2 gamma + 1)^2 / (-a^2)
  double deviation = 0.0;  ///< |ratio - 1|
  bool converged = false;
};

struct AsymptoteReport {
  double gamma = 0.0;
  double b = 0.0;
  int nu = 0;
  std::vector<AsymptotePoint> points;
  bool deviation_decreasing = false;
};

/// Large-a Coulomb limit W ~ -a^2 / (2 nu + 2 gamma + 1)^2.
AsymptoteReport asymptote_check(double gamma, double b, int nu,
                                const std::vector<double>& a_values,
                                double target_tol = 1e-6);

/// A truncation pair (a^{(i)}, W^{(n)}) placed against branch nu = i - 1.
struct OverlayPoint {
  int n = 0;
  int root_index = 0;
  double a = 0.0;
  double energy = 0.0;        ///< truncation energy
  int nu = 0;                 ///< conjectured branch, root_index - 1
  double branch_energy = 0.0; ///< W_nu(a) from the variational spectrum
  double deviation = 0.0;
  bool on_branch = false;
};

struct CurveScan {
  double gamma = 0.0;
  double b = 0.0;
  std::vector<double> a_values;
  /// branches[nu][k] = W_nu(a_values[k]); NaN where the solve failed.
  std::vector<std::vector<double>> branches;
  std::vector<OverlayPoint> truncation_points;
  std::vector<std::string> failures;
  bool branches_decreasing = false;
};

struct ScanOptions {
  int max_n = 4;                ///< truncation degrees overlaid: 0..max_n
  double overlay_tol = 1e-6;
  double target_tol = 1e-8;
  int workers = 0;              ///< 0 = hardware concurrency
};

/// W_nu(a) for nu < branches on an even grid over [a_min, a_max] with the
/// truncation points of degree n <= max_n overlaid.
CurveScan curve_scan(double gamma, double b, double a_min, double a_max,
                     int points, int branches, const ScanOptions& options = {});

/// Overlay points for all real roots of truncation_roots_a, n <= max_n.
std::vector<OverlayPoint> truncation_overlay(double gamma, double b, int max_n,
                                             double overlay_tol,
                                             double target_tol);

struct BCurves {
  int n = 0;
  double gamma = 0.0;
  std::vector<double> a_values;
  /// roots[k] = ascending real roots b^{(i)}(a_values[k]).
  std::vector<std::vector<double>> roots;
};

/// The curves b_{n,gamma}^{(i)}(a) over an even a-grid.
BCurves b_curves(int n, double gamma, double a_min, double a_max, int points);

struct Profile {
  ModelParams params;
  std::vector<int> nus;
  std::vector<double> xi;
  /// values[i][k] = xi_k R_nu_i(xi_k)^2 for normalized R.
  std::vector<std::vector<double>> values;
  std::vector<int> nodes;
};

Profile eigenfunction_profile(const ModelParams& params,
                              const std::vector<int>& nus,
                              const std::vector<double>& xi_grid,
                              double target_tol = 1e-12);

/// xi R^2 on a grid for a normalized radial function.
std::vector<double> density_profile(const RadialFunction& r,
                                    const std::vector<double>& xi_grid);

/// Where the truncation energy of sol sits in the spectrum of its model.
struct Placement {
  int expected_nu = 0;            ///< root_index - 1
  int matched_nu = -1;            ///< index of the nearest eigenvalue
  double deviation = 0.0;         ///< |W_expected - W^{(n)}|
  double nearest_other = 0.0;     ///< min over nu != expected of |W_nu - W^{(n)}|
  std::vector<double> eigenvalues;
};

Placement placement(const frobenius::TruncationSolution& sol, int count,
                    double target_tol = 1e-10);

/// Even grid of `points` values over [lo, hi].
std::vector<double> linspace(double lo, double hi, int points);

}  // namespace radspec::analysis
