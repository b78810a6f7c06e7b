#pragma once

#include <cstddef>

namespace synthrank {

// Work below this many grid cells stays serial; above it, loops over
// independent rows/columns run under OpenMP. Every output element is
// produced by a single serial loop either way, so results are identical
// regardless of thread count.
inline constexpr std::size_t kParallelGrain = 32768;

}  // namespace synthrank
