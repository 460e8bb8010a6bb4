#include "radspec/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <string>

namespace radspec {

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double rel_tol) {
  double error = 0.0;
  double l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      f, lo, hi, 20, rel_tol, &error, &l1);
  if (!std::isfinite(value) || error > 1e3 * rel_tol * l1 + 1e-300) {
    throw QuadratureError("quadrature did not converge on [" +
                          std::to_string(lo) + ", " + std::to_string(hi) +
                          "]: error estimate " + std::to_string(error));
  }
  return value;
}

}  // namespace radspec
