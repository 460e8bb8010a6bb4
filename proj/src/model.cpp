#include "radspec/model.hpp"

#include <cmath>

#include "radspec/format.hpp"

namespace radspec {

void validate(const ModelParams& params) {
  if (!std::isfinite(params.gamma) || !std::isfinite(params.a) ||
      !std::isfinite(params.b)) {
    throw InvalidArgument("model parameters must be finite: " +
                          to_string(params));
  }
  // The recurrence denominators use gamma where |gamma| would be needed for
  // negative values, so negative gamma is rejected rather than guessed.
  if (params.gamma < 0.0) {
    throw InvalidArgument("gamma must be >= 0 (got " +
                          format_number(params.gamma) + ")");
  }
}

std::string to_string(const ModelParams& params) {
  return "gamma=" + format_number(params.gamma) +
         " a=" + format_number(params.a) + " b=" + format_number(params.b);
}

}  // namespace radspec
