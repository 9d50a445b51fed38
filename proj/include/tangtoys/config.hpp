#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

// Flat key-value text config: one `key=value` per line, `#` comments and
// blank lines allowed. Used for classifier thresholds, radio parameters and
// the feedback policy.

namespace tangtoys::config {

using KeyValues = std::map<std::string, std::string>;

// Throws ParseError with the offending line number.
KeyValues parse_kv(std::string_view text);
KeyValues load_file(const std::string& path);

std::string serialize_kv(const KeyValues& kv);

double get_double(const KeyValues& kv, const std::string& key, double fallback);
std::int64_t get_int(const KeyValues& kv, const std::string& key, std::int64_t fallback);
std::uint64_t get_uint(const KeyValues& kv, const std::string& key, std::uint64_t fallback);

}  // namespace tangtoys::config
