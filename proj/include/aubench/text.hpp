#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace aubench {

std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::string to_upper(std::string_view s);

// Round-half-to-even at the given number of decimal digits. Reported table
// values use one digit on a 0-100 scale.
double round_digits(double v, int digits);

// Fixed-point formatting of an already rounded value.
std::string format_fixed(double v, int digits);

}  // namespace aubench
