#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pqsparse {

/// Shortest decimal form that round-trips to the same double bits.
std::string format_double(double v);
double parse_double(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

}  // namespace pqsparse
