#pragma once

#include <variant>

namespace k2u {

// Lower bounds A(t) on the processing service available in any window of
// length t.  The identity curve is a dedicated processor; the segmented and
// bounded-delay curves approximate TDMA-style arbitration from below; the
// exact TDMA curve is kept for the oracle side only.

struct IdentityService {};

struct SegmentedService {
    double T_cycle;
    double C_slot;
    double sigma; // multiplier applied to the slot, normally the problem's sigma
};

struct BoundedDelayService {
    double gamma;   // slope in (0, 1]
    double t_delay; // offset >= 0
};

struct ExactTdmaService {
    double T_cycle;
    double C_slot;
};

using ServiceCurve =
    std::variant<IdentityService, SegmentedService, BoundedDelayService, ExactTdmaService>;

// Throws std::invalid_argument on a malformed curve.
void validate(const ServiceCurve& curve);

// A(t) for t > 0.  The segmented curve is deliberately not clamped at zero:
// the test inequality compares positive demand against it, and clamping
// would silently change the segmented test.
double service_value(const ServiceCurve& curve, double t);

bool is_identity(const ServiceCurve& curve);

} // namespace k2u
