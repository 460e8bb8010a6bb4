#include "radspec/polynomial.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace radspec {

Polynomial::Polynomial(std::vector<double> coefficients)
    : coeffs_(std::move(coefficients)) {}

int Polynomial::degree() const {
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
    if (coeffs_[k] != 0.0) {
      return k;
    }
  }
  return -1;
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

double Polynomial::magnitude(double x) const {
  double acc = 0.0;
  const double ax = std::abs(x);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * ax + std::abs(*it);
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) {
    return Polynomial({0.0});
  }
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d[k - 1] = static_cast<double>(k) * coeffs_[k];
  }
  return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), 0.0);
  }
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
    coeffs_[k] += other.coeffs_[k];
  }
  return *this;
}

Polynomial& Polynomial::operator*=(double factor) {
  for (double& c : coeffs_) {
    c *= factor;
  }
  return *this;
}

Polynomial Polynomial::times_linear(double offset, double slope) const {
  std::vector<double> out(coeffs_.size() + 1, 0.0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out[k] += offset * coeffs_[k];
    out[k + 1] += slope * coeffs_[k];
  }
  return Polynomial(std::move(out));
}

namespace {

std::string describe(const Polynomial& p) {
  std::ostringstream os;
  os.precision(17);
  os << "[";
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    os << (k ? ", " : "") << p.coefficients()[k];
  }
  os << "]";
  return os.str();
}

}  // namespace

RealRoots real_roots(const Polynomial& p, const Residual& residual,
                     double residual_tol) {
  const int deg = p.degree();
  if (deg < 0) {
    throw RootFindingError("zero polynomial has no isolated roots", p);
  }
  RealRoots out;
  if (deg == 0) {
    return out;
  }

  const auto& c = p.coefficients();
  const double lead = c[deg];
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) {
    companion(i, i - 1) = 1.0;
  }
  for (int i = 0; i < deg; ++i) {
    companion(i, deg - 1) = -c[i] / lead;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw RootFindingError(
        "companion eigenvalue iteration did not converge for " + describe(p),
        p);
  }

  const Polynomial dp = p.derivative();
  const Residual eval = residual ? residual : [&](double x) {
    return ValueAndSlope{p(x), dp(x), p.magnitude(x)};
  };

  for (int k = 0; k < deg; ++k) {
    const std::complex<double> z = solver.eigenvalues()[k];
    if (std::abs(z.imag()) > 1e-8 * std::max(1.0, std::abs(z))) {
      ++out.complex_excluded;
      continue;
    }
    double x = z.real();
    ValueAndSlope r = eval(x);
    for (int iter = 0; iter < 60; ++iter) {
      if (std::abs(r.value) <= residual_tol * r.scale || r.slope == 0.0) {
        break;
      }
      const double step = r.value / r.slope;
      const double next = x - step;
      const ValueAndSlope rn = eval(next);
      // Accept only improving steps; near a multiple root Newton can stall.
      if (std::abs(rn.value) > std::abs(r.value)) {
        break;
      }
      x = next;
      r = rn;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) {
        break;
      }
    }
    if (!(std::abs(r.value) <= 1e-8 * r.scale)) {
      throw RootFindingError("Newton polish failed near x=" +
                                 std::to_string(x) + " for " + describe(p),
                             p);
    }
    out.roots.push_back(x);
  }

  std::sort(out.roots.begin(), out.roots.end());
  out.multiplicity.assign(out.roots.size(), 1);
  for (std::size_t i = 0; i < out.roots.size();) {
    std::size_t j = i + 1;
    while (j < out.roots.size() &&
           std::abs(out.roots[j] - out.roots[i]) <=
               1e-6 * std::max(1.0, std::abs(out.roots[i]))) {
      ++j;
    }
    for (std::size_t k = i; k < j; ++k) {
      out.multiplicity[k] = static_cast<int>(j - i);
    }
    i = j;
  }
  return out;
}

}  // namespace radspec
