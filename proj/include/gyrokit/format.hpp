#pragma once

#include <charconv>
#include <string>
#include <system_error>
#include <vector>

namespace gyrokit {

/// Shortest round-trip decimal form of a double ("0.8", not "0.8000...04").
inline std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

inline std::string format_vector(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += format_double(v[i]);
    }
    return out;
}

}  // namespace gyrokit
