#include "radspec/frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace radspec::frobenius {
namespace {

void require_degree(int n) {
  if (n < 0) {
    throw InvalidArgument("polynomial degree n must be >= 0 (got " +
                          std::to_string(n) + ")");
  }
}

void require_gamma(double gamma) { validate(ModelParams{gamma, 0.0, 0.0}); }

// Recurrence step j -> c_{j+2} = first(j) c_{j+1} + second(j) c_j.
double first_denominator(double gamma, int j) {
  return 2.0 * (j + 2) * (2.0 * gamma + j + 2);
}
double second_denominator(double gamma, int j) {
  return 4.0 * (j + 2) * (2.0 * gamma + j + 2);
}

// c_{n+1} as a polynomial in t, where the c_{j+1} factor is
// (offset(j) + slope(j) t) / first_denominator and the energy is pinned to the
// truncation value, which makes the c_j factor 8 (j - n) / second_denominator.
template <class Offset, class Slope>
Polynomial truncation_polynomial(int n, double gamma, Offset offset,
                                 Slope slope) {
  Polynomial prev({0.0});
  Polynomial cur({1.0});
  for (int j = -1; j < n; ++j) {
    const double d1 = first_denominator(gamma, j);
    const double d2 = second_denominator(gamma, j);
    Polynomial next = cur.times_linear(offset(j) / d1, slope(j) / d1);
    Polynomial tail = prev;
    tail *= 8.0 * (j - n) / d2;
    next += tail;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

struct Dual {
  double v = 0.0;
  double d = 0.0;
};

// c_{n+1} and its derivative in the free parameter, evaluated directly from
// the recurrence; used as the Newton residual.
template <class Offset, class Slope>
ValueAndSlope recurrence_residual(int n, double gamma, double t, Offset offset,
                                  Slope slope) {
  Dual prev{0.0, 0.0};
  Dual cur{1.0, 0.0};
  double scale = 1.0;
  for (int j = -1; j < n; ++j) {
    const double d1 = first_denominator(gamma, j);
    const double f = (offset(j) + slope(j) * t) / d1;
    const double df = slope(j) / d1;
    const double g = 8.0 * (j - n) / second_denominator(gamma, j);
    const Dual next{f * cur.v + g * prev.v, df * cur.v + f * cur.d + g * prev.d};
    scale = std::max({scale, std::abs(f * cur.v), std::abs(g * prev.v)});
    prev = cur;
    cur = next;
    if (j + 1 < n) {
      scale = std::max(scale, std::abs(cur.v));
    }
  }
  return {cur.v, cur.d, scale};
}

TruncationRoots finish(int n, Polynomial poly, const Residual& residual) {
  RealRoots found = real_roots(poly, residual);
  TruncationRoots out;
  out.n = n;
  out.polynomial = std::move(poly);
  out.roots = std::move(found.roots);
  out.multiplicity = std::move(found.multiplicity);
  out.complex_excluded = found.complex_excluded;
  return out;
}

}  // namespace

SeriesCoefficients series_coefficients(const ModelParams& params,
                                       double energy, int jmax) {
  validate(params);
  if (jmax < 0) {
    throw InvalidArgument("jmax must be >= 0");
  }
  const double g = params.gamma;
  const double a = params.a;
  const double b = params.b;
  SeriesCoefficients out{params, energy, std::vector<double>(jmax + 1, 0.0)};
  out.c[0] = 1.0;
  double prev = 0.0;
  double cur = 1.0;
  for (int j = -1; j + 2 <= jmax; ++j) {
    const double next =
        (b * (2.0 * g + 2.0 * j + 3.0) - 2.0 * a) * cur /
            first_denominator(g, j) +
        (4.0 * (2.0 * g + 2.0 * j - energy + 2.0) - b * b) * prev /
            second_denominator(g, j);
    out.c[j + 2] = next;
    prev = cur;
    cur = next;
  }
  return out;
}

double truncation_energy(int n, double gamma, double b) {
  require_degree(n);
  require_gamma(gamma);
  return 2.0 * (gamma + n + 1.0) - 0.25 * b * b;
}

Polynomial truncation_polynomial_in_a(int n, double gamma, double b) {
  require_degree(n);
  require_gamma(gamma);
  return truncation_polynomial(
      n, gamma, [&](int j) { return b * (2.0 * gamma + 2.0 * j + 3.0); },
      [](int) { return -2.0; });
}

Polynomial truncation_polynomial_in_b(int n, double gamma, double a) {
  require_degree(n);
  require_gamma(gamma);
  return truncation_polynomial(
      n, gamma, [&](int) { return -2.0 * a; },
      [&](int j) { return 2.0 * gamma + 2.0 * j + 3.0; });
}

TruncationRoots truncation_roots_a(int n, double gamma, double b) {
  auto offset = [=](int j) { return b * (2.0 * gamma + 2.0 * j + 3.0); };
  auto slope = [](int) { return -2.0; };
  return finish(n, truncation_polynomial_in_a(n, gamma, b), [=](double a) {
    return recurrence_residual(n, gamma, a, offset, slope);
  });
}

TruncationRoots truncation_roots_b(int n, double gamma, double a) {
  auto offset = [=](int) { return -2.0 * a; };
  auto slope = [=](int j) { return 2.0 * gamma + 2.0 * j + 3.0; };
  return finish(n, truncation_polynomial_in_b(n, gamma, a), [=](double b) {
    return recurrence_residual(n, gamma, b, offset, slope);
  });
}

namespace {

TruncationSolution make_solution(int n, const ModelParams& params,
                                 int root_index) {
  TruncationSolution sol;
  sol.n = n;
  sol.params = params;
  sol.energy = truncation_energy(n, params.gamma, params.b);
  sol.root_index = root_index;
  sol.coeffs = series_coefficients(params, sol.energy, n).c;
  return sol;
}

}  // namespace

std::vector<TruncationSolution> solutions_in_a(int n, double gamma, double b) {
  const TruncationRoots roots = truncation_roots_a(n, gamma, b);
  std::vector<TruncationSolution> out;
  for (std::size_t i = 0; i < roots.roots.size(); ++i) {
    out.push_back(make_solution(n, ModelParams{gamma, roots.roots[i], b},
                                static_cast<int>(i) + 1));
  }
  return out;
}

std::vector<TruncationSolution> solutions_in_b(int n, double gamma, double a) {
  const TruncationRoots roots = truncation_roots_b(n, gamma, a);
  std::vector<TruncationSolution> out;
  for (std::size_t i = 0; i < roots.roots.size(); ++i) {
    out.push_back(make_solution(n, ModelParams{gamma, a, roots.roots[i]},
                                static_cast<int>(i) + 1));
  }
  return out;
}

RadialFunction polynomial_radial_function(const TruncationSolution& sol) {
  return RadialFunction(
      PolynomialForm{sol.params.gamma, sol.params.b, sol.coeffs});
}

int positive_zero_count(const TruncationSolution& sol) {
  const RealRoots zeros = real_roots(Polynomial(sol.coeffs));
  return static_cast<int>(std::count_if(zeros.roots.begin(), zeros.roots.end(),
                                        [](double x) { return x > 0.0; }));
}

}  // namespace radspec::frobenius
