#pragma once

#include <variant>
#include <vector>

namespace radspec {

/// R(xi) = xi^gamma exp(-b xi/2 - xi^2/2) sum_j c_j xi^j.
struct PolynomialForm {
  double gamma = 0.0;
  double b = 0.0;
  std::vector<double> coeffs;
};

/// R(xi) = xi^gamma exp(-xi^2/2) sum_k y_k p_k(xi), where p_k are the
/// orthonormal polynomials of the weight xi^(2 gamma + 1) exp(-xi^2) on
/// [0, inf), generated by
///   xi p_k = beta_{k+1} p_{k+1} + alpha_k p_k + beta_k p_{k-1},
///   p_0 = p0, p_{-1} = 0.
struct ExpansionForm {
  double gamma = 0.0;
  double p0 = 0.0;
  std::vector<double> alpha;  ///< size N
  std::vector<double> beta;   ///< size N; beta[0] unused
  std::vector<double> y;      ///< size N
};

/// An evaluatable radial function together with its L2 norm under xi dxi.
class RadialFunction {
 public:
  using Form = std::variant<PolynomialForm, ExpansionForm>;

  /// Computes the norm by quadrature.
  explicit RadialFunction(Form form);

  double operator()(double xi) const;
  /// Norm of the function as currently scaled.
  double norm() const { return norm_; }
  /// Copy scaled to unit norm.
  RadialFunction normalized() const;
  /// Copy with R(xi) > 0 as xi -> 0+.
  RadialFunction sign_aligned() const;
  const Form& form() const { return form_; }
  double gamma() const;
  /// Upper integration limit beyond which R^2 xi is negligible.
  double cutoff() const;

  /// Number of sign changes of R on (0, cutoff), ignoring samples whose
  /// magnitude is below rel_floor times the sampled maximum.
  int count_nodes(int samples = 4000, double rel_floor = 1e-9) const;

 private:
  RadialFunction(Form form, double scale, double norm);
  double raw(double xi) const;
  double polynomial_part_at_origin() const;

  Form form_;
  double scale_ = 1.0;
  double norm_ = 0.0;
};

}  // namespace radspec
