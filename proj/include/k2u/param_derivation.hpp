#pragma once

#include <utility>

#include "k2u/k2u_bounds.hpp"
#include "k2u/task_model.hpp"

namespace k2u {

// Automatic construction of KPointParams from an AnalysisProblem.  Each
// derivation places one test point per higher-priority task at its last
// release inside the analysis window and absorbs tasks without such a
// release into the effective C_k.

// Constant-inflation class: interference sigma*(ceil(t/T_i)*C_i + b_i*C_i).
// hp2 = tasks with T_i >= D_k, absorbed as sigma*(1+b_i)*C_i.  For hp1,
// g_i = floor(D_k/T_i), t_i = g_i*T_i, alpha_i = sigma*(g_i+b_i)/g_i,
// beta_i = sigma/g_i.  Requires a constrained deadline (D_k <= T_k).
KPointParams derive_constant_inflation(const AnalysisProblem& problem);

struct ClosedFormVerdicts {
    TestVerdict hyperbolic;
    TestVerdict log_utilization;
};

// Product and logarithmic closed forms specialized to the constant-inflation
// derivation:
//   (C_k_eff/D_k + (1+b)) * prod_{hp1} (sigma U_i + 1) <= 2 + b
//   sigma * sum_{hp1} U_i <= ln((2+b) / (C_k_eff/D_k + 1 + b))
ClosedFormVerdicts constant_inflation_closed_forms(const AnalysisProblem& problem);
ClosedFormVerdicts constant_inflation_closed_forms(const KPointParams& params, double sigma,
                                                   double b_eff);

// Largest per-task inflation of a problem (b, or the override maximum).
double max_inflation(const AnalysisProblem& problem);

// Uniform-jitter class: interference sigma*ceil((t + delta*T_i)/T_i)*C_i
// with non-integral delta >= 0 (an integral delta is the constant-inflation
// class with b = delta; callers are redirected there).  hp2 = tasks whose
// ceiling is constant over the window, absorbed as sigma*ceil(delta)*C_i.
// For hp1, g_i = floor((D_k + delta T_i)/T_i), t_i = (g_i - delta) T_i,
// alpha_i = sigma g_i/(g_i - delta), beta_i = sigma/(g_i - delta).
KPointParams derive_uniform_jitter(const AnalysisProblem& problem, double delta);

// Refined split for the uniform-jitter class, useful when delta sits just
// below an integer: tasks with ceil((D_k + delta T_i)/T_i) <= ceil(delta)+1
// move to hp2 with contribution sigma*ceil((D_k + delta T_i)/T_i)*C_i, which
// tightens the coefficient caps of the remaining hp1 tasks.
KPointParams derive_uniform_jitter_refined(const AnalysisProblem& problem, double delta);

// Independent-jitter class: interference sigma*ceil((t + J_i)/T_i)*C_i with
// per-task jitter J_i >= 0 taken from the hp tasks.  hp2 = tasks whose
// ceiling is constant over the window, absorbed with that constant value.
// For hp1, g_i = floor((D_k + J_i)/T_i), t_i = g_i T_i - J_i,
// alpha_i = sigma g_i/(g_i - J_i/T_i), beta_i = sigma/(g_i - J_i/T_i).
KPointParams derive_independent_jitter(const AnalysisProblem& problem);

// Uniform coefficient bounds guaranteed by each derivation; used to feed the
// hyperbolic/capacity/log conditions.
struct CoefficientCaps {
    double alpha = 0;
    double beta = 0;
};

CoefficientCaps constant_inflation_caps(double sigma, double b);
CoefficientCaps uniform_jitter_caps(double sigma, double delta);
CoefficientCaps uniform_jitter_refined_caps(double sigma, double delta);

// Largest per-entry coefficients actually present; the fallback bound for
// derivations without a theorem-given uniform cap.
CoefficientCaps max_entry_caps(const KPointParams& params, double sigma);

} // namespace k2u
