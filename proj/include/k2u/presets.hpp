#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "k2u/k2u_bounds.hpp"
#include "k2u/task_model.hpp"

namespace k2u {

enum class PresetKind {
    uni_preemptive,
    uni_nonpreemptive,
    bursty,
    mp_global,
    mp_partitioned,
    tdma_segmented,
    tdma_bounded_delay,
    self_suspending_uni,
};

const char* to_string(PresetKind kind);
PresetKind preset_from_string(const std::string& name);

// Scenario parameters.  Only the fields a preset needs have to be set;
// build_problem reports the first missing one by name.
struct PresetConfig {
    std::optional<int> M;            // processor count, mp_* presets
    std::optional<double> b_burst;   // inflation constant, bursty preset
    std::optional<double> T_cycle;   // TDMA presets
    std::optional<double> C_slot;    // TDMA presets
    std::optional<double> gamma;     // tdma_bounded_delay; default C_slot/T_cycle
    std::optional<double> t_delay;   // tdma_bounded_delay; default T_cycle - C_slot
    double sigma = 1.0;              // overridden by mp presets
    double extra_Ck = 0.0;           // user-supplied add-on (DAG adjustments etc.)
};

struct Preset {
    PresetKind kind = PresetKind::uni_preemptive;
    PresetConfig config;
};

// Maps a scenario onto the task with the k-th highest priority of a
// priority-ordered taskset.  The returned problem carries everything the
// derivations and the oracle need; no further scenario knowledge required.
AnalysisProblem build_problem(const Preset& preset, const std::vector<Task>& taskset,
                              std::size_t k_index);

// Closed-form TDMA conditions for implicit-deadline RM tasksets served by a
// TDMA slot (sigma = 1, b = 0).  The product form depends on whether the
// TDMA cycle fits below T_k:
//   T_cycle <  T_k:  prod_{i<=k} (U_i + 1) <= 2/(2 - gamma)
//   T_cycle >= T_k:  prod_{i<k} (U_i + 1) <= 2/(1 + U_k + (T_cycle/T_k)(1 - gamma))
// The bounded-delay form uses t_delay = T_cycle - C_slot:
//   ((C_k + gamma*t_delay)/(gamma*T_k) + 1) * prod_{i<k} (U_i/gamma + 1) <= 2
struct TdmaClosedForms {
    TestVerdict product_form;       // cycle-aware product condition
    TestVerdict bounded_delay_form; // linearized service condition
};

TdmaClosedForms tdma_rm_closed_forms(const std::vector<Task>& taskset, std::size_t k_index,
                                     double T_cycle, double C_slot);

// Total-utilization bound implied by the product form when T_cycle < T_k:
// k((2/(2-gamma))^{1/k} - 1), which tends to ln(2/(2-gamma)) as k grows.
double tdma_rm_utilization_bound(std::size_t k, double gamma);

} // namespace k2u
