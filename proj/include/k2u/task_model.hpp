#pragma once

#include <string>
#include <vector>

#include "k2u/service_curve.hpp"

namespace k2u {

// One sporadic task.  Utilization is always computed from C and T, never
// stored, so the two can not drift apart.
struct Task {
    std::string id;
    double C = 0; // worst-case execution time, > 0
    double T = 0; // minimum inter-arrival time, > 0
    double D = 0; // relative deadline, > 0
    double S = 0; // self-suspension time, >= 0
    double J = 0; // arrival jitter, >= 0

    double utilization() const { return C / T; }

    // Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

enum class DeadlineClass { implicit, constrained, arbitrary };

const char* to_string(DeadlineClass c);

// implicit iff D == T for all tasks, constrained iff D <= T for all tasks
// (and not implicit), arbitrary otherwise.  Throws on an empty set.
DeadlineClass classify(const std::vector<Task>& taskset);

enum class PriorityPolicy { rate_monotonic, deadline_monotonic, as_given };

PriorityPolicy priority_policy_from_string(const std::string& name);

// Returns the taskset in priority order, highest priority first.  RM sorts
// by period, DM by deadline; ties break by smaller C then id, so the order
// is deterministic.
std::vector<Task> assign_priorities(std::vector<Task> taskset, PriorityPolicy policy);

// The task under analysis plus everything the test needs to know about the
// platform: the ordered higher-priority set, the interference multiplier
// sigma, the per-job inflation b, the service curve, and an additive
// execution-time term (blocking, suspension, DAG adjustments).
struct AnalysisProblem {
    Task task_k;
    std::vector<Task> hp; // priority order, higher priority first
    double sigma = 1.0;   // > 0
    double b = 0.0;       // >= 0
    ServiceCurve service = IdentityService{};
    double extra_Ck = 0.0; // >= 0

    // Per-task inflation overrides; empty means every hp task uses b.  The
    // segmented-service reduction needs this: its virtual task may carry a
    // different inflation than the real tasks.
    std::vector<double> hp_inflation;

    double hp_b(std::size_t i) const { return hp_inflation.empty() ? b : hp_inflation[i]; }

    // C_k with the additive term folded in.
    double base_Ck() const { return task_k.C + extra_Ck; }

    void validate() const;
};

} // namespace k2u
