#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k2u/k2u_bounds.hpp"
#include "k2u/param_derivation.hpp"
#include "k2u/presets.hpp"
#include "k2u/tda_oracle.hpp"
#include "k2u/task_model.hpp"

namespace k2u {

struct AnalyzeOptions {
    // Uniform jitter ratio for the whole higher-priority set.  Mutually
    // exclusive with b != 0 and with per-task jitter.
    std::optional<double> delta;
    bool with_oracle = true;
};

// Verdicts of one derivation: the three closed forms, the direct k-point
// evaluation, and the parameters they were computed from.
struct DerivedVerdicts {
    KPointParams params;
    CoefficientCaps caps;
    TestVerdict hyperbolic;
    TestVerdict log_utilization;
    TestVerdict general;
    TestVerdict kpoint;
};

struct TaskReport {
    std::string task_id;
    DerivedVerdicts primary;
    // Refined-split variant, reported alongside the primary for uniform
    // jitter (neither absorption rule dominates the other in general).
    std::optional<DerivedVerdicts> refined;
    std::optional<TestVerdict> oracle;
};

// Routes the problem to the right derivation (service reduction first, then
// inflation or jitter), evaluates every polynomial test on the derived
// parameters, and (unless disabled) the TDA oracle on the original test.
TaskReport analyze_task(const AnalysisProblem& problem, const AnalyzeOptions& options = {});

// Builds and analyzes the problem of every task of a priority-ordered set.
std::vector<TaskReport> analyze_taskset(const Preset& preset, const std::vector<Task>& taskset,
                                        const AnalyzeOptions& options = {});

} // namespace k2u
