#include "k2u/service_curve.hpp"

#include <algorithm>
#include <stdexcept>

#include "k2u/numeric.hpp"

namespace k2u {

void validate(const ServiceCurve& curve) {
    if (const auto* seg = std::get_if<SegmentedService>(&curve)) {
        if (seg->T_cycle <= 0 || seg->C_slot <= 0 || seg->sigma <= 0)
            throw std::invalid_argument("segmented service: T_cycle, C_slot, sigma must be > 0");
        if (seg->T_cycle - seg->sigma * seg->C_slot < 0)
            throw std::invalid_argument("segmented service: T_cycle - sigma*C_slot must be >= 0");
    } else if (const auto* bd = std::get_if<BoundedDelayService>(&curve)) {
        if (bd->gamma <= 0 || bd->gamma > 1)
            throw std::invalid_argument("bounded-delay service: gamma must be in (0, 1]");
        if (bd->t_delay < 0)
            throw std::invalid_argument("bounded-delay service: t_delay must be >= 0");
    } else if (const auto* tdma = std::get_if<ExactTdmaService>(&curve)) {
        if (tdma->T_cycle <= 0 || tdma->C_slot <= 0 || tdma->C_slot > tdma->T_cycle)
            throw std::invalid_argument("exact TDMA service: need 0 < C_slot <= T_cycle");
    }
}

double service_value(const ServiceCurve& curve, double t) {
    if (t <= 0) throw std::invalid_argument("service_value: t must be > 0");
    if (std::holds_alternative<IdentityService>(curve)) return t;
    if (const auto* seg = std::get_if<SegmentedService>(&curve)) {
        double gap = seg->T_cycle - seg->sigma * seg->C_slot;
        return t - snapped_ceil(t / seg->T_cycle) * gap;
    }
    if (const auto* bd = std::get_if<BoundedDelayService>(&curve))
        return std::max(0.0, bd->gamma * (t - bd->t_delay));
    const auto& tdma = std::get<ExactTdmaService>(curve);
    double whole_slots = snapped_floor(t / tdma.T_cycle) * tdma.C_slot;
    double linear = t - snapped_ceil(t / tdma.T_cycle) * (tdma.T_cycle - tdma.C_slot);
    return std::max(whole_slots, linear);
}

bool is_identity(const ServiceCurve& curve) {
    return std::holds_alternative<IdentityService>(curve);
}

} // namespace k2u
