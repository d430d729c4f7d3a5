#pragma once

#include <string>
#include <string_view>

namespace rectcarto {

/// Shortest decimal string that parses back to exactly `value`.
[[nodiscard]] std::string format_double(double value);

/// Strict parse of a whole field as a finite double; false on failure.
[[nodiscard]] bool parse_double(std::string_view text, double& value);

}  // namespace rectcarto
