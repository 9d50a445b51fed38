#include "tangtoys/config.hpp"

#include <fstream>
#include <sstream>

#include "tangtoys/errors.hpp"
#include "tangtoys/strutil.hpp"

namespace tangtoys::config {

KeyValues parse_kv(std::string_view text) {
    KeyValues kv;
    int line_no = 0;
    for (std::string_view line : strutil::split(text, '\n')) {
        ++line_no;
        std::string_view body = strutil::trim(line);
        if (body.empty() || body.front() == '#') continue;
        const std::size_t eq = body.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(line_no, "expected key=value");
        }
        const std::string key(strutil::trim(body.substr(0, eq)));
        const std::string value(strutil::trim(body.substr(eq + 1)));
        if (key.empty()) throw ParseError(line_no, "empty key");
        kv[key] = value;
    }
    return kv;
}

KeyValues load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_kv(buf.str());
}

std::string serialize_kv(const KeyValues& kv) {
    std::string out;
    for (const auto& [key, value] : kv) {
        out += key;
        out += '=';
        out += value;
        out += '\n';
    }
    return out;
}

double get_double(const KeyValues& kv, const std::string& key, double fallback) {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    auto v = strutil::parse_double(it->second);
    if (!v) throw ConfigError("config key " + key + ": not a number: " + it->second);
    return *v;
}

std::int64_t get_int(const KeyValues& kv, const std::string& key, std::int64_t fallback) {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    auto v = strutil::parse_int(it->second);
    if (!v) throw ConfigError("config key " + key + ": not an integer: " + it->second);
    return *v;
}

std::uint64_t get_uint(const KeyValues& kv, const std::string& key, std::uint64_t fallback) {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    auto v = strutil::parse_uint(it->second);
    if (!v) throw ConfigError("config key " + key + ": not an unsigned integer: " + it->second);
    return *v;
}

}  // namespace tangtoys::config
