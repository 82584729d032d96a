#pragma once

#include <cmath>
#include <cstdint>

namespace k2u {

// All time quantities are doubles carrying rational grid values (multiples
// of kGrid).  Ceil/floor arguments are therefore at worst a few ulp away
// from their exact rational value; the snap keeps step functions from
// jumping one period early or late at exact release boundaries.
inline constexpr double kGrid = 1e-3;
inline constexpr double kIntegerSnapTol = 1e-9;

// Extra slack granted to the pseudo-polynomial oracle when it accepts.  The
// closed-form tests get no such grace, so a test that accepts on rounding
// noise can never out-accept the oracle.
inline constexpr double kOracleSlackTol = 1e-9;

inline bool nearly_integer(double x) {
    return std::fabs(x - std::nearbyint(x)) <= kIntegerSnapTol * std::fmax(1.0, std::fabs(x));
}

inline double snapped_ceil(double x) {
    if (nearly_integer(x)) return std::nearbyint(x);
    return std::ceil(x);
}

inline double snapped_floor(double x) {
    if (nearly_integer(x)) return std::nearbyint(x);
    return std::floor(x);
}

// SplitMix64; used to derive independent per-trial seeds so that parallel
// and serial sweeps see identical random streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace k2u
