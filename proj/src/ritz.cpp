#include "radspec/ritz.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "radspec/format.hpp"

namespace radspec::ritz {
namespace {

namespace bmp = boost::multiprecision;

// The scaled monomial-Gaussian Gram matrix has condition ~ 10^(0.76 N), so the
// reduction to standard form needs far more than double precision.
using Real = bmp::number<bmp::cpp_bin_float<120>, bmp::et_off>;
using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

void require_size(int size) {
  if (size < 1) {
    throw InvalidArgument("basis size must be >= 1 (got " +
                          std::to_string(size) + ")");
  }
}

template <class T>
std::vector<T> moment_lattice(double base, int size) {
  std::vector<T> m(size);
  const T p0 = T(base);
  m[0] = boost::math::tgamma((p0 + 1) / 2) / 2;
  if (size > 1) {
    m[1] = boost::math::tgamma((p0 + 2) / 2) / 2;
  }
  for (int k = 2; k < size; ++k) {
    m[k] = m[k - 2] * (p0 + T(k - 1)) / 2;
  }
  return m;
}

// The four operator pieces in the diagonally scaled basis
// u_j / sqrt(M(2 gamma + 2 j + 1)). Index k of the lattice is p = 2 gamma + k.
struct ScaledMatrices {
  RealMatrix overlap;
  RealMatrix hamiltonian;  // symmetrized
  RealMatrix position;     // <xi>
  RealMatrix inverse;      // <1/xi>
  std::vector<Real> scale;
};

ScaledMatrices assemble(const ModelParams& params, int size) {
  const double g = params.gamma;
  const std::vector<Real> m = moment_lattice<Real>(2.0 * g, 2 * size + 1);
  ScaledMatrices out;
  out.scale.resize(size);
  for (int i = 0; i < size; ++i) {
    out.scale[i] = 1 / sqrt(m[2 * i + 1]);
  }
  out.overlap.resize(size, size);
  out.hamiltonian.resize(size, size);
  out.position.resize(size, size);
  out.inverse.resize(size, size);
  const Real a(params.a);
  const Real b(params.b);
  const Real two_g(2.0 * g);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const int k = i + j;
      const Real d = out.scale[i] * out.scale[j];
      Real h = (two_g + 2 * j + 2) * m[k + 1] - a * m[k] + b * m[k + 2];
      if (j > 0) {
        h -= Real(j) * (two_g + j) * m[k - 1];
      }
      out.overlap(i, j) = d * m[k + 1];
      out.hamiltonian(i, j) = d * h;
      out.position(i, j) = d * m[k + 2];
      out.inverse(i, j) = d * m[k];
    }
  }
  const RealMatrix h = out.hamiltonian;
  out.hamiltonian = (h + h.transpose()) / 2;
  return out;
}

// L^{-1} M L^{-T} for lower-triangular L.
template <class Matrix>
Matrix congruence(const Matrix& lower, const Matrix& m) {
  const Matrix half = lower.template triangularView<Eigen::Lower>().solve(m);
  return lower.template triangularView<Eigen::Lower>()
      .solve(half.transpose())
      .transpose();
}

template <class Matrix>
double condition_from_cholesky(const Matrix& lower) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (Eigen::Index i = 0; i < lower.rows(); ++i) {
    const double v = std::abs(static_cast<double>(lower(i, i)));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return lo > 0 ? (hi / lo) * (hi / lo) : std::numeric_limits<double>::infinity();
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> symmetric_eigensolve(
    const Eigen::MatrixXd& reduced) {
  const Eigen::MatrixXd sym = 0.5 * (reduced + reduced.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw EigensolverError("symmetric eigensolver did not converge for a " +
                           std::to_string(sym.rows()) + "x" +
                           std::to_string(sym.cols()) + " reduced matrix");
  }
  return solver;
}

std::vector<bool> degeneracy_flags(const std::vector<double>& w) {
  std::vector<bool> flags(w.size(), false);
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k + 1] - w[k] < kDegeneracyGap) {
      flags[k] = flags[k + 1] = true;
    }
  }
  return flags;
}

void require_count(int count, int size) {
  if (count < 1 || count > size) {
    throw InvalidArgument("eigenpair count must be in [1, " +
                          std::to_string(size) + "] (got " +
                          std::to_string(count) + ")");
  }
}

}  // namespace

MomentTable::MomentTable(double base, int size) : base_(base) {
  if (size < 1) {
    throw InvalidArgument("moment table needs at least one entry");
  }
  // Gamma((p+1)/2) overflows a double for (p+1)/2 above ~171.6.
  if (0.5 * (base + size) > 171.0) {
    throw std::overflow_error("moment M(" + format_number(base + size - 1) +
                              ") overflows double precision");
  }
  values_ = moment_lattice<double>(base, size);
}

MomentTable moments(int p_max) {
  if (p_max < 1) {
    throw InvalidArgument("p_max must be >= 1");
  }
  return MomentTable(0.0, p_max + 1);
}

Eigen::MatrixXd overlap_matrix(double gamma, int size) {
  validate(ModelParams{gamma, 0.0, 0.0});
  require_size(size);
  const MomentTable m(2.0 * gamma, 2 * size);
  Eigen::MatrixXd s(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      s(i, j) = m[i + j + 1];
    }
  }
  return s;
}

Eigen::MatrixXd raw_hamiltonian_matrix(const ModelParams& params, int size) {
  validate(params);
  require_size(size);
  const double g = params.gamma;
  const MomentTable m(2.0 * g, 2 * size + 1);
  Eigen::MatrixXd h(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const int k = i + j;
      double v = (2.0 * g + 2.0 * j + 2.0) * m[k + 1] - params.a * m[k] +
                 params.b * m[k + 2];
      if (j > 0) {
        v -= j * (2.0 * g + j) * m[k - 1];
      }
      h(i, j) = v;
    }
  }
  return h;
}

Eigen::MatrixXd hamiltonian_matrix(const ModelParams& params, int size) {
  const Eigen::MatrixXd h = raw_hamiltonian_matrix(params, size);
  return 0.5 * (h + h.transpose());
}

IllConditionedBasis::IllConditionedBasis(int size, double condition_estimate)
    : Error("overlap matrix lost positive definiteness at N=" +
            std::to_string(size) + " (condition estimate " +
            format_number(condition_estimate) +
            "); use a smaller basis"),
      size_(size),
      condition_(condition_estimate) {}

Eigenpairs solve_generalized(const Eigen::MatrixXd& h,
                             const Eigen::MatrixXd& s, int count) {
  if (h.rows() != h.cols() || s.rows() != s.cols() || h.rows() != s.rows()) {
    throw InvalidArgument("H and S must be square and of equal size");
  }
  const int size = static_cast<int>(h.rows());
  require_count(count, size);
  Eigen::LLT<Eigen::MatrixXd> llt(s);
  if (llt.info() != Eigen::Success) {
    throw IllConditionedBasis(size, s.diagonal().maxCoeff() /
                                        std::max(s.diagonal().minCoeff(), 0.0));
  }
  const Eigen::MatrixXd lower = llt.matrixL();
  const auto solver = symmetric_eigensolve(congruence(lower, h));
  Eigenpairs out;
  out.vectors.resize(size, count);
  for (int k = 0; k < count; ++k) {
    out.values.push_back(solver.eigenvalues()[k]);
    out.vectors.col(k) = lower.transpose().triangularView<Eigen::Upper>().solve(
        solver.eigenvectors().col(k));
  }
  return out;
}

SpectrumResult solve_at(const ModelParams& params, int size, int count) {
  validate(params);
  require_size(size);
  require_count(count, size);
  const ScaledMatrices mats = assemble(params, size);

  Eigen::LLT<RealMatrix> llt(mats.overlap);
  if (llt.info() != Eigen::Success) {
    throw IllConditionedBasis(size, std::numeric_limits<double>::infinity());
  }
  const RealMatrix lower = llt.matrixL();
  const double condition = condition_from_cholesky(lower);
  if (!(condition < 1e90)) {
    throw IllConditionedBasis(size, condition);
  }

  const RealMatrix reduced = congruence(lower, mats.hamiltonian);
  const RealMatrix jacobi = congruence(lower, mats.position);
  const RealMatrix inverse = congruence(lower, mats.inverse);
  const auto solver = symmetric_eigensolve(reduced.cast<double>());

  SpectrumResult out;
  out.params = params;
  out.basis_size = size;
  out.p0 = 1.0 / std::sqrt(MomentTable(2.0 * params.gamma + 1.0, 1)[0]);
  out.alpha.resize(size);
  out.beta.assign(size, 0.0);
  for (int k = 0; k < size; ++k) {
    out.alpha[k] = static_cast<double>(jacobi(k, k));
    if (k > 0) {
      out.beta[k] = static_cast<double>(jacobi(k - 1, k));
    }
  }

  for (int nu = 0; nu < count; ++nu) {
    const double w = solver.eigenvalues()[nu];
    Eigen::VectorXd y = solver.eigenvectors().col(nu);
    y.normalize();
    const RealVector yr = y.cast<Real>();
    const RealVector scaled =
        lower.transpose().triangularView<Eigen::Upper>().solve(yr);

    std::vector<double> coeffs(size);
    for (int j = 0; j < size; ++j) {
      coeffs[j] = static_cast<double>(scaled[j] * mats.scale[j]);
    }
    const RealVector hc = mats.hamiltonian * scaled;
    const RealVector r = hc - Real(w) * (mats.overlap * scaled);

    out.eigenvalues.push_back(w);
    out.coefficient_vectors.push_back(std::move(coeffs));
    out.orthonormal_vectors.emplace_back(y.data(), y.data() + size);
    out.residuals.push_back(static_cast<double>(r.norm() / hc.norm()));
    out.mean_xi.push_back(static_cast<double>(yr.dot(jacobi * yr)));
    out.mean_inverse_xi.push_back(static_cast<double>(yr.dot(inverse * yr)));
  }
  out.convergence.assign(count, std::numeric_limits<double>::infinity());
  out.degenerate = degeneracy_flags(out.eigenvalues);
  return out;
}

SpectrumResult spectrum(const ModelParams& params, int count,
                        double target_tol, const SpectrumOptions& options) {
  validate(params);
  if (count < 1) {
    throw InvalidArgument("count must be >= 1");
  }
  if (!(target_tol > 0.0)) {
    throw InvalidArgument("target_tol must be > 0");
  }
  if (options.n_step < 1 || options.n_start < 1 ||
      options.n_max < options.n_start) {
    throw InvalidArgument("invalid basis schedule");
  }
  int size = options.n_start;
  while (size < count) {
    size += options.n_step;
  }
  if (size > options.n_max) {
    throw InvalidArgument("count " + std::to_string(count) +
                          " exceeds the largest basis size " +
                          std::to_string(options.n_max));
  }

  SpectrumResult best = solve_at(params, size, count);
  for (size += options.n_step; size <= options.n_max; size += options.n_step) {
    SpectrumResult next = solve_at(params, size, count);
    for (int nu = 0; nu < count; ++nu) {
      next.convergence[nu] =
          std::abs(next.eigenvalues[nu] - best.eigenvalues[nu]);
    }
    best = std::move(next);
    if (best.convergence[count - 1] < target_tol) {
      best.converged = true;
      break;
    }
  }
  return best;
}

RadialFunction SpectrumResult::radial_function(int nu) const {
  if (nu < 0 || nu >= static_cast<int>(orthonormal_vectors.size())) {
    throw InvalidArgument("eigenvector index out of range");
  }
  ExpansionForm form{params.gamma, p0, alpha, beta, orthonormal_vectors[nu]};
  return RadialFunction(std::move(form)).normalized().sign_aligned();
}

}  // namespace radspec::ritz
