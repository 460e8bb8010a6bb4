#pragma once

#include <stdexcept>
#include <string>

namespace radspec {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an argument violates a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Parameters of the radial operator
///
///   L = -d^2/dxi^2 - (1/xi) d/dxi + gamma^2/xi^2 - a/xi + b xi + xi^2
///
/// acting on functions square integrable under the measure xi dxi.
struct ModelParams {
  double gamma = 0.0;  ///< effective angular quantum number, >= 0
  double a = 0.0;      ///< Coulomb strength
  double b = 0.0;      ///< linear-term strength
};

/// Throws InvalidArgument unless all fields are finite and gamma >= 0.
void validate(const ModelParams& params);

std::string to_string(const ModelParams& params);

}  // namespace radspec
