#pragma once

#include <string>

namespace fpcutoff {

// Round-trip-faithful decimal rendering (17 significant digits); infinities
// render as "inf"/"-inf".
std::string format_double(double value);

// format_double, but quoted for JSON when the value is not finite.
std::string json_number(double value);

std::string json_escape(const std::string& s);

std::string json_string(const std::string& s);

std::string json_bool(bool value);

}  // namespace fpcutoff
