#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tangtoys::strutil {

// Splits on a single-character delimiter; keeps empty fields.
std::vector<std::string_view> split(std::string_view text, char delim);

std::string_view trim(std::string_view text);

// Shortest decimal form that parses back to the same double ("12", "0.3",
// "9.81"). Used everywhere a double enters a log, trace or wire line so
// serialized output is reproducible byte for byte.
std::string format_double(double value);

// Fixed two-decimal form, used for RSSI values in traces.
std::string format_fixed2(double value);

std::optional<double> parse_double(std::string_view text);
std::optional<std::int64_t> parse_int(std::string_view text);
std::optional<std::uint64_t> parse_uint(std::string_view text);

}  // namespace tangtoys::strutil
