#pragma once

#include <optional>
#include <vector>

#include "k2u/k2u_bounds.hpp"
#include "k2u/task_model.hpp"

namespace k2u {

// Pseudo-polynomial ground truth.  Every polynomial test in this library is
// validated against tda_accepts on the original (pre-derivation) test form.

struct DemandTerm {
    double C = 0;     // > 0
    double T = 0;     // > 0
    double J = 0;     // >= 0
    double b = 0;     // >= 0
    double sigma = 1; // > 0
};

// exists t in (0, horizon] with
//   C_k_eff + sum_i sigma_i*(ceil((t + J_i)/T_i)*C_i + b_i*C_i) <= A(t)
struct GeneralizedTest {
    double C_k_eff = 0;
    std::vector<DemandTerm> terms;
    ServiceCurve service = IdentityService{};
    double horizon = 0; // = D_k

    void validate() const;
};

// Demand side of the test at time t.
double demand_at(const GeneralizedTest& test, double t);

// All release instants m*T_i - J_i in (0, horizon], plus the service-cycle
// boundaries for segmented/exact TDMA curves, plus the horizon itself;
// deduplicated and ascending.  The step demand is at its pre-jump value at
// each of these points, so they are exactly the local optima of the slack.
std::vector<double> candidate_points(const GeneralizedTest& test);

// Evaluates the test at every candidate point.  Accepts with kOracleSlackTol
// grace so the oracle can only ever over-accept relative to the closed
// forms.  Witness is the first satisfying point.
TestVerdict tda_accepts(const GeneralizedTest& test);

// Least fixed point of R = C_k + sum ceil(R/T_i)*C_i, iterated from
// R_0 = C_k.  Returns nullopt once R exceeds task_k.D (divergence for the
// purpose of a deadline test).  Plain uniprocessor setting only: sigma = 1,
// b = 0, J = 0, identity service.
std::optional<double> wcrt_fixed_point(const Task& task_k, const std::vector<Task>& hp);

// The original test a problem stands for, before any k-point derivation:
// jitter taken per task (or uniformly as delta*T_i when delta is given),
// inflation per task, the problem's own service curve, horizon D_k.
GeneralizedTest original_test(const AnalysisProblem& problem,
                              std::optional<double> delta = std::nullopt);

} // namespace k2u
