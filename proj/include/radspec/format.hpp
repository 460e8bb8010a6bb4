#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace radspec {

/// Significant digits used for every serialized number.
inline constexpr int kSignificantDigits = 10;

/// Shortest general-format rendering with kSignificantDigits significant
/// digits. Locale independent; negative zero is printed as "0".
std::string format_number(double value);

/// Locale-independent parse of a complete decimal string.
std::optional<double> parse_number(std::string_view text);

}  // namespace radspec
