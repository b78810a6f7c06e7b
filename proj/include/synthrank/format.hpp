#pragma once

#include <string>

namespace synthrank {

/// Shortest decimal string that parses back to exactly the same double
/// ("412", "26.1", "0.3216307345217861").
std::string format_shortest(double value);

/// Fixed-point with the given number of decimals; NaN renders as empty,
/// infinities as "inf"/"-inf".
std::string format_fixed(double value, int decimals);

}  // namespace synthrank
