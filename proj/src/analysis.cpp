#include "k2u/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "k2u/numeric.hpp"
#include "k2u/reductions.hpp"

namespace k2u {

namespace {

DerivedVerdicts evaluate_all(const KPointParams& params, const CoefficientCaps& caps) {
    DerivedVerdicts out;
    out.params = params;
    out.caps = caps;
    out.hyperbolic = hyperbolic_test(params, caps.alpha, caps.beta);
    out.log_utilization = log_utilization_test(params, caps.alpha, caps.beta);
    out.general = general_test(params);
    out.kpoint = evaluate_kpoint(params);
    return out;
}

DerivedVerdicts all_unknown() {
    DerivedVerdicts out;
    out.hyperbolic = {Verdict::unknown, "hyperbolic", 0};
    out.log_utilization = {Verdict::unknown, "log_util", 0};
    out.general = {Verdict::unknown, "general", 0};
    out.kpoint = {Verdict::unknown, "kpoint", 0};
    return out;
}

bool has_per_task_jitter(const AnalysisProblem& problem) {
    for (const auto& task : problem.hp)
        if (task.J != 0) return true;
    return false;
}

} // namespace

TaskReport analyze_task(const AnalysisProblem& problem, const AnalyzeOptions& options) {
    problem.validate();
    TaskReport report;
    report.task_id = problem.task_k.id;

    if (options.with_oracle) report.oracle = tda_accepts(original_test(problem, options.delta));

    AnalysisProblem reduced = problem;
    if (std::holds_alternative<SegmentedService>(problem.service)) {
        if (options.delta)
            throw std::invalid_argument("uniform jitter on a bounded service is not defined");
        reduced = reduce_segmented(problem);
    } else if (std::holds_alternative<BoundedDelayService>(problem.service)) {
        if (options.delta)
            throw std::invalid_argument("uniform jitter on a bounded service is not defined");
        const auto& bd = std::get<BoundedDelayService>(problem.service);
        if (bd.t_delay >= problem.task_k.D) {
            // no point of (0, D_k] can pass: the service is still zero at the
            // deadline
            report.primary = all_unknown();
            return report;
        }
        reduced = reduce_bounded_delay(problem);
    } else if (std::holds_alternative<ExactTdmaService>(problem.service)) {
        throw std::invalid_argument("exact TDMA service is oracle-only; analyze a lower bound");
    }

    if (options.delta && has_per_task_jitter(reduced))
        throw std::invalid_argument("uniform jitter and per-task jitter are mutually exclusive");

    if (options.delta && nearly_integer(*options.delta)) {
        // integral jitter ratio is plain inflation with b = delta
        if (reduced.b != 0)
            throw std::invalid_argument("uniform jitter and inflation b are mutually exclusive");
        AnalysisProblem inflated = reduced;
        inflated.b = std::nearbyint(*options.delta);
        inflated.hp_inflation.clear();
        KPointParams params = derive_constant_inflation(inflated);
        report.primary =
            evaluate_all(params, constant_inflation_caps(inflated.sigma, inflated.b));
        auto closed = constant_inflation_closed_forms(params, inflated.sigma, inflated.b);
        report.primary.hyperbolic = closed.hyperbolic;
        report.primary.log_utilization = closed.log_utilization;
        return report;
    }

    if (options.delta) {
        KPointParams params = derive_uniform_jitter(reduced, *options.delta);
        report.primary = evaluate_all(params, uniform_jitter_caps(reduced.sigma, *options.delta));
        KPointParams refined = derive_uniform_jitter_refined(reduced, *options.delta);
        report.refined =
            evaluate_all(refined, uniform_jitter_refined_caps(reduced.sigma, *options.delta));
        return report;
    }

    if (has_per_task_jitter(reduced)) {
        KPointParams params = derive_independent_jitter(reduced);
        // no theorem-given uniform cap here; the entry maxima are valid bounds
        report.primary = evaluate_all(params, max_entry_caps(params, reduced.sigma));
        return report;
    }

    KPointParams params = derive_constant_inflation(reduced);
    const double b_eff = max_inflation(reduced);
    report.primary = evaluate_all(params, constant_inflation_caps(reduced.sigma, b_eff));
    // surface the product/log forms with slack in the product normalization
    auto closed = constant_inflation_closed_forms(params, reduced.sigma, b_eff);
    report.primary.hyperbolic = closed.hyperbolic;
    report.primary.log_utilization = closed.log_utilization;
    return report;
}

std::vector<TaskReport> analyze_taskset(const Preset& preset, const std::vector<Task>& taskset,
                                        const AnalyzeOptions& options) {
    std::vector<TaskReport> reports;
    reports.reserve(taskset.size());
    for (std::size_t k = 0; k < taskset.size(); ++k) {
        AnalysisProblem problem = build_problem(preset, taskset, k);
        reports.push_back(analyze_task(problem, options));
    }
    return reports;
}

} // namespace k2u
