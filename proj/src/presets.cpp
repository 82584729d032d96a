#include "k2u/presets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "k2u/numeric.hpp"

namespace k2u {

const char* to_string(PresetKind kind) {
    switch (kind) {
    case PresetKind::uni_preemptive: return "uni_preemptive";
    case PresetKind::uni_nonpreemptive: return "uni_nonpreemptive";
    case PresetKind::bursty: return "bursty";
    case PresetKind::mp_global: return "mp_global";
    case PresetKind::mp_partitioned: return "mp_partitioned";
    case PresetKind::tdma_segmented: return "tdma_segmented";
    case PresetKind::tdma_bounded_delay: return "tdma_bounded_delay";
    case PresetKind::self_suspending_uni: return "self_suspending_uni";
    }
    return "?";
}

PresetKind preset_from_string(const std::string& name) {
    for (PresetKind kind :
         {PresetKind::uni_preemptive, PresetKind::uni_nonpreemptive, PresetKind::bursty,
          PresetKind::mp_global, PresetKind::mp_partitioned, PresetKind::tdma_segmented,
          PresetKind::tdma_bounded_delay, PresetKind::self_suspending_uni})
        if (name == to_string(kind)) return kind;
    throw std::invalid_argument("unknown preset: " + name);
}

namespace {

template <typename T>
T require_field(const std::optional<T>& field, const char* preset, const char* name) {
    if (!field)
        throw std::invalid_argument(std::string(preset) + ": missing config field " + name);
    return *field;
}

std::pair<double, double> bounded_delay_shape(const PresetConfig& config, double sigma) {
    // Either gamma/t_delay directly, or the linearization of a TDMA slot:
    // gamma = sigma*C_slot/T_cycle, t_delay = T_cycle - sigma*C_slot.
    if (config.gamma || config.t_delay) {
        double gamma = require_field(config.gamma, "tdma_bounded_delay", "gamma");
        double t_delay = config.t_delay.value_or(0.0);
        return {gamma, t_delay};
    }
    double T_cycle = require_field(config.T_cycle, "tdma_bounded_delay", "T_cycle");
    double C_slot = require_field(config.C_slot, "tdma_bounded_delay", "C_slot");
    return {sigma * C_slot / T_cycle, T_cycle - sigma * C_slot};
}

} // namespace

AnalysisProblem build_problem(const Preset& preset, const std::vector<Task>& taskset,
                              std::size_t k_index) {
    if (k_index >= taskset.size())
        throw std::invalid_argument("build_problem: k_index out of range");

    AnalysisProblem problem;
    problem.task_k = taskset[k_index];
    problem.hp.assign(taskset.begin(), taskset.begin() + static_cast<std::ptrdiff_t>(k_index));
    problem.sigma = preset.config.sigma;
    problem.extra_Ck = preset.config.extra_Ck;

    const PresetConfig& config = preset.config;
    switch (preset.kind) {
    case PresetKind::uni_preemptive:
        break;
    case PresetKind::uni_nonpreemptive: {
        // blocked by at most one lower-priority job
        double blocking = 0;
        for (std::size_t i = k_index + 1; i < taskset.size(); ++i)
            blocking = std::max(blocking, taskset[i].C);
        problem.extra_Ck += blocking;
        break;
    }
    case PresetKind::bursty:
        problem.b = require_field(config.b_burst, "bursty", "b_burst");
        break;
    case PresetKind::mp_global: {
        int M = require_field(config.M, "mp_global", "M");
        if (M < 1) throw std::invalid_argument("mp_global: M must be >= 1");
        problem.sigma = 1.0 / M;
        problem.b = 1;
        break;
    }
    case PresetKind::mp_partitioned: {
        int M = require_field(config.M, "mp_partitioned", "M");
        if (M < 1) throw std::invalid_argument("mp_partitioned: M must be >= 1");
        problem.sigma = 1.0 / M;
        problem.b = 0;
        break;
    }
    case PresetKind::tdma_segmented: {
        double T_cycle = require_field(config.T_cycle, "tdma_segmented", "T_cycle");
        double C_slot = require_field(config.C_slot, "tdma_segmented", "C_slot");
        problem.service = SegmentedService{T_cycle, C_slot, problem.sigma};
        break;
    }
    case PresetKind::tdma_bounded_delay: {
        auto [gamma, t_delay] = bounded_delay_shape(config, problem.sigma);
        problem.service = BoundedDelayService{gamma, t_delay};
        break;
    }
    case PresetKind::self_suspending_uni: {
        if (classify(taskset) != DeadlineClass::implicit)
            throw std::invalid_argument("self_suspending_uni: implicit-deadline taskset required");
        problem.extra_Ck += problem.task_k.S;
        for (auto& task : problem.hp) {
            task.J = task.T - task.C;
            task.S = 0; // suspension of hp tasks is folded into their jitter
        }
        break;
    }
    }
    problem.validate();
    return problem;
}

TdmaClosedForms tdma_rm_closed_forms(const std::vector<Task>& taskset, std::size_t k_index,
                                     double T_cycle, double C_slot) {
    if (k_index >= taskset.size())
        throw std::invalid_argument("tdma_rm_closed_forms: k_index out of range");
    if (classify(taskset) != DeadlineClass::implicit)
        throw std::invalid_argument("tdma_rm_closed_forms: implicit-deadline taskset required");
    if (!(T_cycle > 0) || !(C_slot > 0) || C_slot > T_cycle)
        throw std::invalid_argument("tdma_rm_closed_forms: need 0 < C_slot <= T_cycle");

    const Task& task_k = taskset[k_index];
    const double gamma = C_slot / T_cycle;
    const double U_k = task_k.utilization();

    double hp_product = 1;
    double hp_product_scaled = 1; // with U_i/gamma
    for (std::size_t i = 0; i < k_index; ++i) {
        hp_product *= taskset[i].utilization() + 1;
        hp_product_scaled *= taskset[i].utilization() / gamma + 1;
    }

    TdmaClosedForms out;
    if (T_cycle < task_k.T) {
        double lhs = (U_k + 1) * hp_product;
        double rhs = 2 / (2 - gamma);
        out.product_form = {lhs <= rhs ? Verdict::schedulable : Verdict::unknown,
                            "tdma_product_small_cycle", rhs - lhs};
    } else {
        double lhs = hp_product;
        double rhs = 2 / (1 + U_k + (T_cycle / task_k.T) * (1 - gamma));
        out.product_form = {lhs <= rhs ? Verdict::schedulable : Verdict::unknown,
                            "tdma_product_large_cycle", rhs - lhs};
    }
    {
        double t_delay = T_cycle - C_slot;
        double lhs = ((task_k.C + gamma * t_delay) / (gamma * task_k.T) + 1) * hp_product_scaled;
        out.bounded_delay_form = {lhs <= 2 ? Verdict::schedulable : Verdict::unknown,
                                  "tdma_bounded_delay_form", 2 - lhs};
    }
    return out;
}

double tdma_rm_utilization_bound(std::size_t k, double gamma) {
    if (k < 1) throw std::invalid_argument("tdma_rm_utilization_bound: k must be >= 1");
    if (!(gamma > 0) || gamma > 1)
        throw std::invalid_argument("tdma_rm_utilization_bound: gamma must be in (0, 1]");
    double base = 2 / (2 - gamma);
    return static_cast<double>(k) * std::expm1(std::log(base) / static_cast<double>(k));
}

} // namespace k2u
