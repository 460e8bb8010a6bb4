#pragma once

#include <Eigen/Dense>
#include <vector>

#include "radspec/model.hpp"
#include "radspec/radial_function.hpp"

namespace radspec::ritz {

/// Gaussian moments M(p) = Gamma((p+1)/2) / 2 = int_0^inf xi^p e^{-xi^2} dxi
/// on the lattice p = base + k, k = 0 .. size-1.
class MomentTable {
 public:
  /// Seeds M(base) and M(base+1) from the Gamma function, then applies
  /// M(p+2) = M(p) (p+1)/2. Throws std::overflow_error past double range.
  MomentTable(double base, int size);

  double base() const { return base_; }
  int size() const { return static_cast<int>(values_.size()); }
  /// M(base + k).
  double operator[](int k) const { return values_.at(k); }

 private:
  double base_;
  std::vector<double> values_;
};

/// M(p) for integer 0 <= p <= p_max.
MomentTable moments(int p_max);

/// S_ij = <u_i|u_j> = M(2 gamma + i + j + 1) for u_j = xi^(gamma+j) e^{-xi^2/2}.
Eigen::MatrixXd overlap_matrix(double gamma, int size);

/// H_ij = <u_i|L u_j> before symmetrization.
Eigen::MatrixXd raw_hamiltonian_matrix(const ModelParams& params, int size);
/// (H + H^T) / 2.
Eigen::MatrixXd hamiltonian_matrix(const ModelParams& params, int size);

/// Cholesky of the overlap broke down: the basis is numerically dependent.
class IllConditionedBasis : public Error {
 public:
  IllConditionedBasis(int size, double condition_estimate);
  int size() const { return size_; }
  double condition_estimate() const { return condition_; }

 private:
  int size_;
  double condition_;
};

class EigensolverError : public Error {
 public:
  using Error::Error;
};

struct Eigenpairs {
  std::vector<double> values;  ///< ascending
  Eigen::MatrixXd vectors;     ///< column k pairs with values[k]; c^T S c = 1
};

/// Lowest `count` eigenpairs of H c = W S c by Cholesky reduction of S and a
/// dense symmetric eigensolve, all in double precision. Suitable for
/// well-conditioned pencils; spectrum() uses an extended-precision reduction.
Eigenpairs solve_generalized(const Eigen::MatrixXd& h, const Eigen::MatrixXd& s,
                             int count);

struct SpectrumOptions {
  int n_start = 10;
  int n_step = 10;
  int n_max = 80;
};

/// Variational spectrum for one basis size (or the last size of a
/// convergence sequence).
struct SpectrumResult {
  ModelParams params;
  int basis_size = 0;
  std::vector<double> eigenvalues;  ///< ascending
  /// Coefficients of each eigenvector in the unscaled basis u_j, normalized
  /// so that the expanded R has unit norm.
  std::vector<std::vector<double>> coefficient_vectors;
  /// Same eigenvectors in the orthonormal-polynomial basis; unit vectors.
  std::vector<std::vector<double>> orthonormal_vectors;
  /// |W_nu(N) - W_nu(N - step)|; infinity when only one size was run.
  std::vector<double> convergence;
  /// ||H c - W S c|| / ||H c|| evaluated in extended precision.
  std::vector<double> residuals;
  /// <1/xi> and <xi> from the moment matrices (no quadrature).
  std::vector<double> mean_inverse_xi;
  std::vector<double> mean_xi;
  /// True when eigenvalue k is within 1e-12 of eigenvalue k+1 (or k-1).
  std::vector<bool> degenerate;
  bool converged = false;

  /// Recurrence data for the orthonormal polynomials of the basis.
  double p0 = 0.0;
  std::vector<double> alpha;
  std::vector<double> beta;

  /// Eigenfunction nu as a unit-norm RadialFunction with R > 0 near 0.
  RadialFunction radial_function(int nu) const;
};

inline constexpr double kDegeneracyGap = 1e-12;

/// Solves at a fixed basis size.
SpectrumResult solve_at(const ModelParams& params, int size, int count);

/// Grows the basis N = n_start, n_start + n_step, ... up to n_max until the
/// highest requested eigenvalue moves by less than target_tol. An
/// unconverged result at n_max is returned with converged = false.
SpectrumResult spectrum(const ModelParams& params, int count,
                        double target_tol, const SpectrumOptions& options = {});

}  // namespace radspec::ritz
