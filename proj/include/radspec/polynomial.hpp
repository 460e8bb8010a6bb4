#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "radspec/model.hpp"

namespace radspec {

/// Dense real polynomial, coefficients in ascending powers.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients);

  /// Degree after discarding exactly-zero leading coefficients; -1 for the
  /// zero polynomial.
  int degree() const;
  const std::vector<double>& coefficients() const { return coeffs_; }
  double coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : 0.0;
  }

  double operator()(double x) const;
  /// Sum of |c_k| |x|^k, the natural scale for judging a residual p(x).
  double magnitude(double x) const;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator*=(double factor);
  /// Multiplies by (offset + slope * x).
  Polynomial times_linear(double offset, double slope) const;

 private:
  std::vector<double> coeffs_;
};

/// Raised when the companion eigenvalue solve or the Newton polish fails.
/// Carries the polynomial that could not be solved.
class RootFindingError : public Error {
 public:
  RootFindingError(const std::string& what, Polynomial polynomial)
      : Error(what), polynomial_(std::move(polynomial)) {}
  const Polynomial& polynomial() const { return polynomial_; }

 private:
  Polynomial polynomial_;
};

struct RealRoots {
  std::vector<double> roots;        ///< ascending, never merged
  std::vector<int> multiplicity;    ///< cluster size of each root
  int complex_excluded = 0;         ///< companion roots with |Im| > 1e-8 |z|
};

/// A function value together with its derivative, used for Newton polishing
/// against a residual other than the expanded polynomial.
struct ValueAndSlope {
  double value = 0.0;
  double slope = 0.0;
  double scale = 1.0;  ///< magnitude the value is judged against
};
using Residual = std::function<ValueAndSlope(double)>;

/// Real roots of p via the eigenvalues of its companion matrix, each polished
/// by Newton iteration on `residual` (defaults to p itself) until
/// |residual| <= residual_tol * scale.
RealRoots real_roots(const Polynomial& p, const Residual& residual = {},
                     double residual_tol = 1e-12);

}  // namespace radspec
