#pragma once

#include <vector>

#include "radspec/model.hpp"
#include "radspec/polynomial.hpp"
#include "radspec/radial_function.hpp"

namespace radspec::frobenius {

/// Power-series coefficients of P(xi) in R = xi^gamma e^{-b xi/2 - xi^2/2} P.
struct SeriesCoefficients {
  ModelParams params;
  double energy = 0.0;
  std::vector<double> c;  ///< c_0 .. c_jmax, c_0 = 1
};

/// Runs the three-term recurrence from c_{-1} = 0, c_0 = 1.
SeriesCoefficients series_coefficients(const ModelParams& params,
                                       double energy, int jmax);

/// W = 2(gamma + n + 1) - b^2/4, the energy that makes the c_j term of the
/// recurrence vanish at j = n.
double truncation_energy(int n, double gamma, double b);

/// c_{n+1} as a polynomial of degree n+1 in a (energy fixed by
/// truncation_energy).
Polynomial truncation_polynomial_in_a(int n, double gamma, double b);

/// c_{n+1} as a polynomial of degree n+1 in b, with the energy tied to b
/// through truncation_energy.
Polynomial truncation_polynomial_in_b(int n, double gamma, double a);

/// Roots of a truncation polynomial, ascending, polished on the recurrence.
struct TruncationRoots {
  int n = 0;
  Polynomial polynomial;
  std::vector<double> roots;
  std::vector<int> multiplicity;
  int complex_excluded = 0;
};

TruncationRoots truncation_roots_a(int n, double gamma, double b);
TruncationRoots truncation_roots_b(int n, double gamma, double a);

/// One isolated exact solution with polynomial factor of degree n.
struct TruncationSolution {
  int n = 0;
  ModelParams params;  ///< with a (or b) set to a root
  double energy = 0.0;
  int root_index = 1;  ///< 1-based position among the ascending roots
  std::vector<double> coeffs;  ///< c_0 .. c_n
};

/// Solutions for every real root a^{(i)} of truncation_roots_a.
std::vector<TruncationSolution> solutions_in_a(int n, double gamma, double b);
/// Solutions for every real root b^{(i)} of truncation_roots_b.
std::vector<TruncationSolution> solutions_in_b(int n, double gamma, double a);

/// R(xi) = xi^gamma exp(-b xi/2 - xi^2/2) sum_{j<=n} c_j xi^j, unnormalized.
RadialFunction polynomial_radial_function(const TruncationSolution& sol);

/// Number of positive real zeros of the polynomial factor of sol.
int positive_zero_count(const TruncationSolution& sol);

}  // namespace radspec::frobenius
