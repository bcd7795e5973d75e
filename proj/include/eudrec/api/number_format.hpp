#pragma once

#include <json.hpp>
#include <string>

namespace eudrec::api {

/// Rounds half-up to three decimals on the decimal expansion and strips
/// trailing zeros: 1.8 -> "1.8", 3.0 -> "3", 3.14159 -> "3.142",
/// 2.8855 -> "2.886".
std::string format_decimal3(double value);

/// Same rounding as a JSON number; integral results become JSON integers.
nlohmann::ordered_json json_decimal3(double value);

/// "<low> - <high>", each side through format_decimal3.
std::string format_range(double low, double high);

}  // namespace eudrec::api
