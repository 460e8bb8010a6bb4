#include "radspec/radial_function.hpp"

#include <cmath>
#include <utility>

#include "radspec/quadrature.hpp"

namespace radspec {
namespace {

double polynomial_part(const PolynomialForm& f, double xi) {
  double acc = 0.0;
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) {
    acc = acc * xi + *it;
  }
  return acc;
}

double polynomial_part(const ExpansionForm& f, double xi) {
  double prev = 0.0;
  double cur = f.p0;
  double acc = f.y.empty() ? 0.0 : f.y[0] * cur;
  for (std::size_t k = 0; k + 1 < f.y.size(); ++k) {
    const double back = k > 0 ? f.beta[k] * prev : 0.0;
    const double next = ((xi - f.alpha[k]) * cur - back) / f.beta[k + 1];
    prev = cur;
    cur = next;
    acc += f.y[k + 1] * cur;
  }
  return acc;
}

double envelope(const PolynomialForm& f, double xi) {
  return std::pow(xi, f.gamma) * std::exp(-0.5 * f.b * xi - 0.5 * xi * xi);
}

double envelope(const ExpansionForm& f, double xi) {
  return std::pow(xi, f.gamma) * std::exp(-0.5 * xi * xi);
}

}  // namespace

RadialFunction::RadialFunction(Form form) : form_(std::move(form)) {
  const double cut = cutoff();
  const double norm2 =
      integrate([this](double xi) { const double r = raw(xi); return r * r * xi; },
                0.0, cut);
  norm_ = std::sqrt(norm2);
}

RadialFunction::RadialFunction(Form form, double scale, double norm)
    : form_(std::move(form)), scale_(scale), norm_(norm) {}

double RadialFunction::raw(double xi) const {
  return std::visit(
      [xi](const auto& f) { return envelope(f, xi) * polynomial_part(f, xi); },
      form_);
}

double RadialFunction::operator()(double xi) const { return scale_ * raw(xi); }

RadialFunction RadialFunction::normalized() const {
  return RadialFunction(form_, scale_ / norm_, 1.0);
}

double RadialFunction::polynomial_part_at_origin() const {
  return std::visit([](const auto& f) { return polynomial_part(f, 0.0); },
                    form_);
}

RadialFunction RadialFunction::sign_aligned() const {
  double lead = scale_ * polynomial_part_at_origin();
  if (lead == 0.0) {
    lead = (*this)(1e-3);
  }
  return lead < 0.0 ? RadialFunction(form_, -scale_, norm_) : *this;
}

double RadialFunction::gamma() const {
  return std::visit([](const auto& f) { return f.gamma; }, form_);
}

double RadialFunction::cutoff() const {
  const double b = std::holds_alternative<PolynomialForm>(form_)
                       ? std::get<PolynomialForm>(form_).b
                       : 0.0;
  return gamma() + std::abs(b) + 12.0;
}

int RadialFunction::count_nodes(int samples, double rel_floor) const {
  const double cut = cutoff();
  std::vector<double> values(samples);
  double peak = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double xi = cut * (k + 0.5) / samples;
    values[k] = (*this)(xi);
    peak = std::max(peak, std::abs(values[k]));
  }
  int nodes = 0;
  int last_sign = 0;
  for (double v : values) {
    if (std::abs(v) <= rel_floor * peak) {
      continue;
    }
    const int sign = v > 0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) {
      ++nodes;
    }
    last_sign = sign;
  }
  return nodes;
}

}  // namespace radspec
