#pragma once

#include <functional>

#include "radspec/model.hpp"

namespace radspec {

class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// Adaptive Gauss-Kronrod integral of f over [lo, hi]. Throws
/// QuadratureError if the error estimate stays above rel_tol * |result|
/// (plus a tiny absolute floor) after refinement.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double rel_tol = 1e-13);

}  // namespace radspec
