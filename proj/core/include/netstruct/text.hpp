#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace netstruct {

/// Shortest decimal form that parses back to the same double ('.' decimal
/// point, no locale). Used by every file format so that serialization
/// round-trips losslessly and byte-identically.
std::string format_double(double x);

/// Strict parse of a full token; throws std::invalid_argument on leftovers.
double parse_double(std::string_view token);
std::uint64_t parse_uint(std::string_view token);

std::vector<std::string_view> split(std::string_view line, char sep);

}  // namespace netstruct
