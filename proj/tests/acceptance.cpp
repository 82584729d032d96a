// Acceptance suite: every criterion prints one pass/fail line and the
// process exits nonzero if any of them failed.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "k2u/analysis.hpp"
#include "k2u/param_derivation.hpp"
#include "k2u/presets.hpp"
#include "k2u/reductions.hpp"
#include "k2u/sweep.hpp"
#include "k2u/tda_oracle.hpp"
#include "testutil.hpp"

using namespace k2u;
using testutil::ProblemClass;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

// ---- criterion 1: total-utilization bound reproduces the classic limits

void criterion_1() {
    auto start = clock_type::now();

    // k = 2 and k = 10 through actually derived parameters
    bool derived_ok = true;
    for (std::size_t k : {std::size_t{2}, std::size_t{10}}) {
        std::vector<Task> taskset;
        for (std::size_t i = 0; i < k; ++i) {
            Task t;
            t.id = "t" + std::to_string(i);
            t.C = 0.01;
            t.T = 2 + static_cast<double>(i) * 0.5;
            t.D = t.T;
            taskset.push_back(t);
        }
        taskset = assign_priorities(taskset, PriorityPolicy::rate_monotonic);
        Preset preset; // uni_preemptive: sigma = 1, b = 0
        auto problem = build_problem(preset, taskset, k - 1);
        auto params = derive_constant_inflation(problem);
        derived_ok = derived_ok && params.entries.size() == k - 1;
        auto verdict = capacity_test(params, 1, 1);
        double lhs = params.C_k_eff / params.t_k;
        for (const auto& e : params.entries) lhs += e.U;
        double rhs = verdict.witness + lhs; // slack + lhs
        double want = k == 2 ? 0.828427 : 0.717735;
        derived_ok = derived_ok && std::fabs(rhs - want) <= 1e-6;
    }

    bool limit_ok = std::fabs(capacity_bound(1000000, 1, 1) - std::log(2.0)) <= 1e-5;
    double elapsed = seconds_since(start);
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "utilization bound k(2^(1/k)-1): k=2,10 via derived params, k=1e6 vs ln 2 "
                  "(%.3fs)",
                  elapsed);
    report(1, derived_ok && limit_ok && elapsed < 1.0, detail);
}

// ---- criterion 2: TDMA utilization bound limit

void criterion_2() {
    auto start = clock_type::now();
    bool ok = std::fabs(tdma_rm_utilization_bound(1000000, 0.4) - std::log(1.25)) <= 1e-5;
    double elapsed = seconds_since(start);
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "TDMA bound k((2/(2-g))^(1/k)-1) at g=0.4, k=1e6 vs ln 1.25 (%.3fs)", elapsed);
    report(2, ok && elapsed < 1.0, detail);
}

// ---- criteria 3-5: dominance, majorization and caps over random instances

struct SuiteCounters {
    long long dominance_violations = 0;
    long long majorization_violations = 0;
    long long cap_violations = 0;
    long long poly_accepts = 0;
    long long instances = 0;
};

void check_instance(ProblemClass cls, std::uint64_t seed, SuiteCounters& counters) {
    auto instance = testutil::random_problem(cls, seed);
    AnalyzeOptions options;
    options.delta = instance.delta;
    TaskReport report = analyze_task(instance.problem, options);
    const bool oracle_ok = report.oracle->ok();

    auto tally = [&](const DerivedVerdicts& v) {
        for (const TestVerdict* verdict :
             {&v.hyperbolic, &v.log_utilization, &v.general, &v.kpoint}) {
            if (verdict->ok()) {
                ++counters.poly_accepts;
                if (!oracle_ok) ++counters.dominance_violations;
            }
        }
    };
    tally(report.primary);
    if (report.refined) tally(*report.refined);

    // majorization is an inflation-form property: check it on the problem the
    // parameters were actually derived from
    AnalysisProblem derived_from = instance.problem;
    if (std::holds_alternative<SegmentedService>(instance.problem.service))
        derived_from = reduce_segmented(instance.problem);
    else if (std::holds_alternative<BoundedDelayService>(instance.problem.service))
        derived_from = reduce_bounded_delay(instance.problem);
    if (!testutil::majorization_holds(report.primary.params, derived_from, instance.delta))
        ++counters.majorization_violations;
    if (report.refined &&
        !testutil::majorization_holds(report.refined->params, derived_from, instance.delta))
        ++counters.majorization_violations;

    // theorem coefficient caps
    const double grace = 1 + 1e-12;
    auto caps_hold = [&](const KPointParams& params, const CoefficientCaps& caps) {
        for (const auto& e : params.entries)
            if (e.alpha > caps.alpha * grace || e.beta > caps.beta * grace) return false;
        return true;
    };
    if (cls == ProblemClass::inflation) {
        if (!caps_hold(report.primary.params,
                       constant_inflation_caps(instance.problem.sigma, instance.problem.b)))
            ++counters.cap_violations;
    } else if (cls == ProblemClass::uniform_jitter) {
        if (!caps_hold(report.primary.params,
                       uniform_jitter_caps(instance.problem.sigma, *instance.delta)))
            ++counters.cap_violations;
        if (!caps_hold(report.refined->params,
                       uniform_jitter_refined_caps(instance.problem.sigma, *instance.delta)))
            ++counters.cap_violations;
    }
    ++counters.instances;
}

void criteria_3_to_5() {
    auto start = clock_type::now();
    const ProblemClass classes[] = {ProblemClass::inflation, ProblemClass::uniform_jitter,
                                    ProblemClass::independent_jitter, ProblemClass::tdma_segmented,
                                    ProblemClass::tdma_bounded_delay};
    const long long per_class = 10000;

    SuiteCounters total;
#pragma omp parallel
    {
        SuiteCounters local;
#pragma omp for schedule(dynamic, 64) nowait
        for (long long i = 0; i < per_class * 5; ++i) {
            ProblemClass cls = classes[i / per_class];
            check_instance(cls, static_cast<std::uint64_t>(i), local);
        }
#pragma omp critical
        {
            total.dominance_violations += local.dominance_violations;
            total.majorization_violations += local.majorization_violations;
            total.cap_violations += local.cap_violations;
            total.poly_accepts += local.poly_accepts;
            total.instances += local.instances;
        }
    }
    double elapsed = seconds_since(start);

    char detail[220];
    std::snprintf(detail, sizeof detail,
                  "dominance: %lld violations over %lld instances (%lld accepting verdicts, "
                  "%.1fs < 60s)",
                  total.dominance_violations, total.instances, total.poly_accepts, elapsed);
    report(3, total.dominance_violations == 0 && total.instances == per_class * 5 &&
                  total.poly_accepts > 0 && elapsed < 60.0,
           detail);

    std::snprintf(detail, sizeof detail, "majorization: %lld violations over the same instances",
                  total.majorization_violations);
    report(4, total.majorization_violations == 0, detail);

    std::snprintf(detail, sizeof detail, "coefficient caps: %lld violations over the same instances",
                  total.cap_violations);
    report(5, total.cap_violations == 0, detail);
}

// ---- criterion 6: candidate points against a dense grid

void criterion_6() {
    auto start = clock_type::now();
    const ProblemClass classes[] = {ProblemClass::inflation, ProblemClass::uniform_jitter,
                                    ProblemClass::independent_jitter, ProblemClass::tdma_segmented,
                                    ProblemClass::tdma_bounded_delay};
    long long disagreements = 0;
    long long grid_accepts = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : disagreements, grid_accepts)
    for (long long i = 0; i < 1000; ++i) {
        auto instance = testutil::random_problem(classes[i % 5], 77000 + i);
        auto test = original_test(instance.problem, instance.delta);
        if (testutil::dense_grid_accepts(test, 100000)) {
            ++grid_accepts;
            if (!tda_accepts(test).ok()) ++disagreements;
        }
    }
    double elapsed = seconds_since(start);
    char detail[200];
    std::snprintf(detail, sizeof detail,
                  "oracle self-check: %lld accept-direction disagreements vs dense grid "
                  "(%lld grid accepts, %.1fs)",
                  disagreements, grid_accepts, elapsed);
    report(6, disagreements == 0 && grid_accepts > 0, detail);
}

// ---- criterion 7: service-curve fixtures

void criterion_7() {
    const ServiceCurve segmented = SegmentedService{5, 2, 1};
    const ServiceCurve bounded = BoundedDelayService{0.4, 3};
    const ServiceCurve exact = ExactTdmaService{5, 2};
    const double ts[] = {3, 5, 6, 8, 10};
    const double want_segmented[] = {0, 2, 0, 2, 4};
    const double want_bounded[] = {0, 0.8, 1.2, 2, 2.8};
    const double want_exact[] = {0, 2, 2, 2, 4};

    int mismatches = 0;
    for (int i = 0; i < 5; ++i) {
        if (service_value(segmented, ts[i]) != want_segmented[i]) ++mismatches;
        if (std::fabs(service_value(bounded, ts[i]) - want_bounded[i]) > 1e-12) ++mismatches;
        if (service_value(exact, ts[i]) != want_exact[i]) ++mismatches;
    }
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "service-curve fixtures at t in {3,5,6,8,10}: %d mismatches of 15 values",
                  mismatches);
    report(7, mismatches == 0, detail);
}

// ---- criterion 8: derivation equivalences, field by field

void criterion_8() {
    long long mismatches = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        // uniform jitter delta == per-task jitter delta*T_i, bit for bit
        {
            auto instance = testutil::random_problem(ProblemClass::uniform_jitter, seed);
            auto uniform = derive_uniform_jitter(instance.problem, *instance.delta);
            auto per_task = instance.problem;
            for (auto& task : per_task.hp) task.J = *instance.delta * task.T;
            auto independent = derive_independent_jitter(per_task);
            if (uniform.C_k_eff != independent.C_k_eff ||
                uniform.entries.size() != independent.entries.size() ||
                uniform.hp2_ids() != independent.hp2_ids())
                ++mismatches;
            else
                for (std::size_t i = 0; i < uniform.entries.size(); ++i) {
                    const auto& a = uniform.entries[i];
                    const auto& b = independent.entries[i];
                    if (a.task_id != b.task_id || a.t != b.t || a.alpha != b.alpha ||
                        a.beta != b.beta || a.U != b.U)
                        ++mismatches;
                }
        }
        // zero jitter == constant inflation with b = 0, bit for bit
        {
            auto instance = testutil::random_problem(ProblemClass::inflation, seed);
            instance.problem.b = 0;
            auto via_jitter = derive_independent_jitter(instance.problem);
            auto via_inflation = derive_constant_inflation(instance.problem);
            if (via_jitter.C_k_eff != via_inflation.C_k_eff ||
                via_jitter.entries.size() != via_inflation.entries.size() ||
                via_jitter.hp2_ids() != via_inflation.hp2_ids())
                ++mismatches;
            else
                for (std::size_t i = 0; i < via_jitter.entries.size(); ++i) {
                    const auto& a = via_jitter.entries[i];
                    const auto& b = via_inflation.entries[i];
                    if (a.task_id != b.task_id || a.t != b.t || a.alpha != b.alpha ||
                        a.beta != b.beta || a.U != b.U)
                        ++mismatches;
                }
        }
    }
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "derivation equivalences on 1000 random instances: %lld field mismatches",
                  mismatches);
    report(8, mismatches == 0, detail);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criteria_3_to_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (failures == 0) std::printf("acceptance: all criteria passed\n");
    else std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
