#include "synthrank/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace synthrank {

std::string format_shortest(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

std::string format_fixed(double value, int decimals) {
    if (std::isnan(value)) return "";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const int len = std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return std::string(buf, buf + len);
}

}  // namespace synthrank
