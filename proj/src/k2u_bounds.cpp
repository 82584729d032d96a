#include "k2u/k2u_bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace k2u {

const char* to_string(SplitRule rule) {
    switch (rule) {
    case SplitRule::period_vs_dk: return "period_vs_Dk";
    case SplitRule::jitter_ceiling: return "jitter_ceiling";
    case SplitRule::jitter_ceiling_refined: return "jitter_ceiling_refined";
    case SplitRule::independent_jitter: return "independent_jitter";
    }
    return "?";
}

void KPointParams::validate() const {
    if (!(t_k > 0)) throw std::invalid_argument("t_k must be > 0");
    if (!(C_k_eff > 0)) throw std::invalid_argument("C_k_eff must be > 0");
    double prev = 0;
    for (const auto& e : entries) {
        if (!(e.t > 0) || e.t < prev || e.t > t_k)
            throw std::invalid_argument("index order violated");
        prev = e.t;
        if (!(e.alpha > 0) || !(e.beta > 0) || !(e.U > 0))
            throw std::invalid_argument("entry coefficients must be > 0");
    }
}

TestVerdict evaluate_kpoint(const KPointParams& params) {
    params.validate();
    double alpha_load = 0;
    for (const auto& e : params.entries) alpha_load += e.alpha * e.t * e.U;

    // j-th candidate: C + alpha_load + sum_{i<j} beta_i t_i U_i <= t_j
    double beta_prefix = 0;
    for (std::size_t j = 0; j < params.entries.size(); ++j) {
        double lhs = params.C_k_eff + alpha_load + beta_prefix;
        if (lhs <= params.entries[j].t)
            return {Verdict::schedulable, "kpoint", params.entries[j].t};
        const auto& e = params.entries[j];
        beta_prefix += e.beta * e.t * e.U;
    }
    double lhs = params.C_k_eff + alpha_load + beta_prefix;
    if (lhs <= params.t_k) return {Verdict::schedulable, "kpoint", params.t_k};
    return {Verdict::unknown, "kpoint", params.t_k - lhs};
}

namespace {

void check_uniform_caps(const KPointParams& params, double alpha, double beta) {
    if (!(alpha > 0) || !(beta > 0))
        throw std::invalid_argument("alpha and beta must be > 0");
    // Last-bit allowance: derived coefficients and their caps come from
    // algebraically equal but differently rounded expressions.
    const double grace = 1 + 1e-12;
    for (const auto& e : params.entries)
        if (e.alpha > alpha * grace || e.beta > beta * grace)
            throw std::invalid_argument("uniform bound violated");
}

} // namespace

TestVerdict hyperbolic_test(const KPointParams& params, double alpha, double beta) {
    params.validate();
    check_uniform_caps(params, alpha, beta);
    double ratio = alpha / beta;
    double product = 1;
    for (const auto& e : params.entries) product *= beta * e.U + 1;
    double rhs = (ratio + 1) / product - ratio;
    double lhs = params.C_k_eff / params.t_k;
    if (lhs <= rhs) return {Verdict::schedulable, "hyperbolic", rhs - lhs};
    return {Verdict::unknown, "hyperbolic", rhs - lhs};
}

double capacity_bound(std::size_t k, double alpha, double beta) {
    if (k < 1) throw std::invalid_argument("capacity_bound: k must be >= 1");
    // (alpha+beta)^{1/k} via expm1/log to stay accurate for huge k.
    double root = std::expm1(std::log(alpha + beta) / static_cast<double>(k));
    double root_full = root + 1;
    return ((static_cast<double>(k) - 1) * root + (root_full - alpha)) / beta;
}

TestVerdict capacity_test(const KPointParams& params, double alpha, double beta) {
    params.validate();
    check_uniform_caps(params, alpha, beta);
    double total_u = 0;
    for (const auto& e : params.entries) total_u += e.U;
    double rhs = capacity_bound(params.entries.size() + 1, alpha, beta);
    double lhs = params.C_k_eff / params.t_k + total_u;
    if (lhs <= rhs) return {Verdict::schedulable, "capacity", rhs - lhs};
    return {Verdict::unknown, "capacity", rhs - lhs};
}

TestVerdict log_utilization_test(const KPointParams& params, double alpha, double beta) {
    params.validate();
    check_uniform_caps(params, alpha, beta);
    double ratio = alpha / beta;
    double denom = params.C_k_eff / params.t_k + ratio;
    if (!(denom > 0)) throw std::invalid_argument("degenerate ratio");
    double rhs = std::log((ratio + 1) / denom);
    double total_u = 0;
    for (const auto& e : params.entries) total_u += e.U;
    double lhs = beta * total_u;
    if (lhs <= rhs) return {Verdict::schedulable, "log_util", rhs - lhs};
    return {Verdict::unknown, "log_util", rhs - lhs};
}

TestVerdict general_test(const KPointParams& params) {
    params.validate();
    // Suffix products of (beta_j U_j + 1) over j >= i, in stored order.
    double rhs = 1;
    double suffix = 1;
    for (std::size_t i = params.entries.size(); i-- > 0;) {
        const auto& e = params.entries[i];
        suffix *= e.beta * e.U + 1;
        rhs -= e.U * (e.alpha + e.beta) / suffix;
    }
    double lhs = params.C_k_eff / params.t_k;
    if (lhs > 0 && lhs <= rhs) return {Verdict::schedulable, "general", rhs - lhs};
    return {Verdict::unknown, "general", rhs - lhs};
}

} // namespace k2u
