#pragma once

#include <vector>

#include "radspec/model.hpp"

namespace radspec::oracle {

/// Uniform cell-centred grid on [0, xi_max]: nodes at (k + 1/2) h,
/// h = xi_max / num_points, zero flux through xi = 0 and u = 0 beyond xi_max.
struct GridSpec {
  double xi_max = 15.0;
  int num_points = 40000;

  double step() const { return xi_max / num_points; }
};

void validate(const GridSpec& grid);

struct FdSpectrum {
  std::vector<double> eigenvalues;  ///< ascending
  /// True when the eigenvector keeps more than 1e-6 of its peak amplitude
  /// in the outermost cell, i.e. the box wall is felt.
  std::vector<bool> box_contaminated;
};

/// Lowest `count` eigenvalues of the second-order finite-volume
/// discretization of the radial operator, written for u = sqrt(xi) R so the
/// matrix is symmetric tridiagonal.
FdSpectrum fd_spectrum(const ModelParams& params, const GridSpec& grid,
                       int count);

/// Symmetric tridiagonal matrix given by its diagonal and off-diagonal.
struct Tridiagonal {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;  ///< size n - 1
};

Tridiagonal fd_matrix(const ModelParams& params, const GridSpec& grid);

/// Number of eigenvalues strictly below x (Sturm count).
int eigenvalues_below(const Tridiagonal& t, double x);

/// k-th smallest eigenvalue (0-based) by bisection on the Sturm count.
double kth_eigenvalue(const Tridiagonal& t, int k);

/// Unit eigenvector for an (accurate) eigenvalue by inverse iteration.
std::vector<double> eigenvector(const Tridiagonal& t, double eigenvalue);

/// log2(e_coarse / e_fine) for errors at steps h and h/2.
double observed_order(double error_coarse, double error_fine);

}  // namespace radspec::oracle
