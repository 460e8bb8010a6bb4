#include "radspec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace radspec::oracle {

void validate(const GridSpec& grid) {
  if (!(grid.xi_max > 0.0) || !std::isfinite(grid.xi_max)) {
    throw InvalidArgument("grid xi_max must be positive and finite");
  }
  if (grid.num_points < 100) {
    throw InvalidArgument("grid needs at least 100 points (got " +
                          std::to_string(grid.num_points) + ")");
  }
}

// Flux form for P = R / xi^gamma with weight xi^(2 gamma + 1); P is smooth at
// the origin, so the stencil stays second order for any gamma. Cell masses
// and the Coulomb term are integrated exactly over each cell, since their
// integrands are not smooth at 0 for fractional gamma. The symmetric unknown
// is sqrt(mass) P, which samples sqrt(xi) R.
Tridiagonal fd_matrix(const ModelParams& params, const GridSpec& grid) {
  radspec::validate(params);
  validate(grid);
  const int n = grid.num_points;
  const double h = grid.step();
  const double w = 2.0 * params.gamma + 1.0;
  // r^p - l^p without cancellation.
  auto power_step = [h](double l, double p) {
    if (l == 0.0) return std::pow(h, p);
    return std::pow(l, p) * std::expm1(p * std::log1p(h / l));
  };
  std::vector<double> mass(n);
  for (int k = 0; k < n; ++k) {
    mass[k] = power_step(k * h, w + 1.0) / (w + 1.0);
  }
  Tridiagonal t;
  t.diagonal.resize(n);
  t.off_diagonal.resize(n - 1);
  for (int k = 0; k < n; ++k) {
    const double xi = (k + 0.5) * h;
    const double face_in = std::pow(k * h, w);  // zero at the origin
    const double face_out = std::pow((k + 1) * h, w);
    const double coulomb = power_step(k * h, w) / w / mass[k];
    const double potential = -params.a * coulomb + params.b * xi + xi * xi;
    t.diagonal[k] = (face_in + face_out) / (h * mass[k]) + potential;
    if (k + 1 < n) {
      t.off_diagonal[k] = -face_out / (h * std::sqrt(mass[k] * mass[k + 1]));
    }
  }
  return t;
}

int eigenvalues_below(const Tridiagonal& t, double x) {
  const std::size_t n = t.diagonal.size();
  int count = 0;
  double q = t.diagonal[0] - x;
  if (q < 0.0) {
    ++count;
  }
  for (std::size_t k = 1; k < n; ++k) {
    if (q == 0.0) {
      q = std::numeric_limits<double>::epsilon() *
          (std::abs(t.off_diagonal[k - 1]) + 1.0);
    }
    const double e = t.off_diagonal[k - 1];
    q = t.diagonal[k] - x - e * e / q;
    if (q < 0.0) {
      ++count;
    }
  }
  return count;
}

double kth_eigenvalue(const Tridiagonal& t, int k) {
  const std::size_t n = t.diagonal.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i > 0 ? std::abs(t.off_diagonal[i - 1]) : 0.0;
    const double right = i + 1 < n ? std::abs(t.off_diagonal[i]) : 0.0;
    lo = std::min(lo, t.diagonal[i] - left - right);
    hi = std::max(hi, t.diagonal[i] + left + right);
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;
    }
    if (eigenvalues_below(t, mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> eigenvector(const Tridiagonal& t, double eigenvalue) {
  const std::size_t n = t.diagonal.size();
  // Shift slightly off the eigenvalue so the factorization stays regular.
  const double shift =
      eigenvalue + 1e-10 * std::max(1.0, std::abs(eigenvalue));
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> c(n), d(n);
  for (int iter = 0; iter < 3; ++iter) {
    // Thomas algorithm for (T - shift) x = v.
    double denom = t.diagonal[0] - shift;
    c[0] = n > 1 ? t.off_diagonal[0] / denom : 0.0;
    d[0] = v[0] / denom;
    for (std::size_t k = 1; k < n; ++k) {
      const double e = t.off_diagonal[k - 1];
      denom = t.diagonal[k] - shift - e * c[k - 1];
      if (denom == 0.0) {
        denom = std::numeric_limits<double>::min();
      }
      c[k] = k + 1 < n ? t.off_diagonal[k] / denom : 0.0;
      d[k] = (v[k] - e * d[k - 1]) / denom;
    }
    v[n - 1] = d[n - 1];
    for (std::size_t k = n - 1; k-- > 0;) {
      v[k] = d[k] - c[k] * v[k + 1];
    }
    double norm = 0.0;
    for (double x : v) {
      norm += x * x;
    }
    norm = std::sqrt(norm);
    for (double& x : v) {
      x /= norm;
    }
  }
  return v;
}

FdSpectrum fd_spectrum(const ModelParams& params, const GridSpec& grid,
                       int count) {
  validate(grid);
  if (count < 1 || count > grid.num_points / 10) {
    throw InvalidArgument("count " + std::to_string(count) +
                          " exceeds what a " +
                          std::to_string(grid.num_points) +
                          "-point grid resolves");
  }
  const Tridiagonal t = fd_matrix(params, grid);
  FdSpectrum out;
  for (int k = 0; k < count; ++k) {
    const double w = kth_eigenvalue(t, k);
    const std::vector<double> u = eigenvector(t, w);
    double peak = 0.0;
    for (double x : u) {
      peak = std::max(peak, std::abs(x));
    }
    out.eigenvalues.push_back(w);
    out.box_contaminated.push_back(std::abs(u.back()) > 1e-6 * peak);
  }
  return out;
}

double observed_order(double error_coarse, double error_fine) {
  return std::log2(std::abs(error_coarse) / std::abs(error_fine));
}

}  // namespace radspec::oracle
