#pragma once

#include "k2u/task_model.hpp"

namespace k2u {

// Rewrites of bounded-service tests into constant-inflation form with an
// identity service curve.

// Id given to the virtual higher-priority task that stands in for the
// service gaps of a segmented curve.
inline constexpr const char* kServiceTaskId = "_service";

// Segmented curve A(t) = t - ceil(t/T_cycle)*(T_cycle - sigma_c*C_slot):
// moves the gap term to the demand side as a virtual task with period
// T_cycle and execution time (T_cycle - sigma_c*C_slot)/sigma.  When
// C_k - sigma*b*C_v > 0 the virtual task is inflated like every other task
// and C_k is reduced by the borrowed amount; otherwise the virtual task is
// left uninflated.  A zero-width gap (full bandwidth) reduces to a no-op.
AnalysisProblem reduce_segmented(const AnalysisProblem& problem);

// Bounded-delay curve A(t) = max{0, gamma*(t - t_delay)}: rescales the test
// to C_k <- (C_k + gamma*t_delay)/gamma, sigma <- sigma/gamma.  Requires
// t_delay < D_k; with t_delay >= D_k no point of the window can pass and
// callers must short-circuit to unknown instead of reducing.
AnalysisProblem reduce_bounded_delay(const AnalysisProblem& problem);

} // namespace k2u
