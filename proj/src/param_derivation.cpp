#include "k2u/param_derivation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "k2u/numeric.hpp"

namespace k2u {

namespace {

void require_constrained(const AnalysisProblem& problem) {
    if (problem.task_k.D > problem.task_k.T)
        throw std::invalid_argument("constrained-deadline required");
}

void require_no_inflation(const AnalysisProblem& problem, const char* what) {
    if (problem.b != 0 || !problem.hp_inflation.empty())
        throw std::invalid_argument(std::string(what) + " and inflation b are mutually exclusive");
}

struct KeyedEntry {
    KPointEntry entry;
    double T; // tie-break key
};

// Sorts by non-decreasing test point (ties by period then id, so the order
// is deterministic), fills entries and hp1, and validates the result.
void finish(KPointParams& params, std::vector<KeyedEntry> keyed, const AnalysisProblem& problem) {
    if (!(params.C_k_eff > 0)) throw std::invalid_argument("C_k_eff must be > 0");
    std::stable_sort(keyed.begin(), keyed.end(), [](const KeyedEntry& a, const KeyedEntry& b) {
        return std::tie(a.entry.t, a.T, a.entry.task_id) <
               std::tie(b.entry.t, b.T, b.entry.task_id);
    });
    params.entries.reserve(keyed.size());
    for (auto& k : keyed) {
        params.split.hp1.push_back(k.entry.task_id);
        params.entries.push_back(std::move(k.entry));
    }
    params.t_k = problem.task_k.D;
    params.validate();
}

} // namespace

KPointParams derive_constant_inflation(const AnalysisProblem& problem) {
    problem.validate();
    require_constrained(problem);
    if (!is_identity(problem.service))
        throw std::invalid_argument("constant-inflation derivation needs an identity service");

    const double D_k = problem.task_k.D;
    KPointParams params;
    params.split.rule = SplitRule::period_vs_dk;
    params.C_k_eff = problem.base_Ck();
    std::vector<KeyedEntry> keyed;

    for (std::size_t i = 0; i < problem.hp.size(); ++i) {
        const Task& task = problem.hp[i];
        const double b_i = problem.hp_b(i);
        if (task.T >= D_k) {
            params.C_k_eff += problem.sigma * (1 + b_i) * task.C;
            params.split.hp2.push_back(task.id);
            continue;
        }
        double g = snapped_floor(D_k / task.T); // >= 1 since T < D_k
        KPointEntry entry;
        entry.task_id = task.id;
        entry.t = std::min(g * task.T, D_k);
        entry.alpha = problem.sigma * (g + b_i) / g;
        entry.beta = problem.sigma / g;
        entry.U = task.utilization();
        keyed.push_back({std::move(entry), task.T});
    }
    finish(params, std::move(keyed), problem);
    return params;
}

double max_inflation(const AnalysisProblem& problem) {
    double b_eff = problem.b;
    if (!problem.hp_inflation.empty())
        for (std::size_t i = 0; i < problem.hp.size(); ++i)
            b_eff = std::max(b_eff, problem.hp_b(i));
    return b_eff;
}

ClosedFormVerdicts constant_inflation_closed_forms(const KPointParams& params, double sigma,
                                                   double b_eff) {
    double product = 1;
    double total_u = 0;
    for (const auto& e : params.entries) {
        product *= sigma * e.U + 1;
        total_u += e.U;
    }
    const double load = params.C_k_eff / params.t_k;

    ClosedFormVerdicts out;
    {
        double lhs = (load + (1 + b_eff)) * product;
        double rhs = 2 + b_eff;
        out.hyperbolic = {lhs <= rhs ? Verdict::schedulable : Verdict::unknown, "hyperbolic",
                          rhs - lhs};
    }
    {
        double lhs = sigma * total_u;
        double rhs = std::log((2 + b_eff) / (load + 1 + b_eff));
        out.log_utilization = {lhs <= rhs ? Verdict::schedulable : Verdict::unknown, "log_util",
                               rhs - lhs};
    }
    return out;
}

ClosedFormVerdicts constant_inflation_closed_forms(const AnalysisProblem& problem) {
    KPointParams params = derive_constant_inflation(problem);
    return constant_inflation_closed_forms(params, problem.sigma, max_inflation(problem));
}

namespace {

// Shared core of the jitter-family derivations.  Each hp task gets its test
// point at the last release inside the window; a task whose interference
// ceiling is already constant over the whole window has no such release and
// is absorbed into C_k_eff instead.
//
// refined widens the absorbed set to every task with at most one release
// inside the window.  That costs the (larger) window ceiling in C_k_eff but
// tightens the coefficient caps of the remaining tasks.
KPointParams derive_jitter(const AnalysisProblem& problem, const std::vector<double>& jitter,
                           SplitRule rule, bool refined) {
    const double D_k = problem.task_k.D;
    KPointParams params;
    params.split.rule = rule;
    params.C_k_eff = problem.base_Ck();
    std::vector<KeyedEntry> keyed;

    for (std::size_t i = 0; i < problem.hp.size(); ++i) {
        const Task& task = problem.hp[i];
        const double J = jitter[i];
        const double rho = J / task.T;
        const double x = (D_k + J) / task.T;
        const double window_ceil = snapped_ceil(x);
        const double floor_rho = snapped_floor(rho);

        const bool absorbed =
            refined ? (window_ceil <= floor_rho + 2) : (window_ceil <= floor_rho + 1);
        if (absorbed) {
            const double jobs = refined ? window_ceil : floor_rho + 1;
            params.C_k_eff += problem.sigma * jobs * task.C;
            params.split.hp2.push_back(task.id);
            continue;
        }

        const double g = snapped_floor(x);
        if (!(g > rho)) throw std::logic_error("jitter derivation: test point collapsed to zero");
        KPointEntry entry;
        entry.task_id = task.id;
        entry.t = std::min(g * task.T - J, D_k);
        entry.alpha = problem.sigma * g / (g - rho);
        entry.beta = problem.sigma / (g - rho);
        entry.U = task.utilization();
        keyed.push_back({std::move(entry), task.T});
    }
    finish(params, std::move(keyed), problem);
    return params;
}

std::vector<double> uniform_jitter_values(const AnalysisProblem& problem, double delta) {
    std::vector<double> jitter;
    jitter.reserve(problem.hp.size());
    for (const auto& task : problem.hp) jitter.push_back(delta * task.T);
    return jitter;
}

void check_uniform_jitter_pre(const AnalysisProblem& problem, double delta) {
    problem.validate();
    require_constrained(problem);
    require_no_inflation(problem, "uniform jitter");
    if (!is_identity(problem.service))
        throw std::invalid_argument("jitter derivation needs an identity service");
    if (delta < 0) throw std::invalid_argument("delta must be >= 0");
    if (nearly_integer(delta))
        throw std::invalid_argument("integral delta: use constant-inflation path");
    for (const auto& task : problem.hp)
        if (task.J != 0)
            throw std::invalid_argument("uniform jitter and per-task jitter are mutually exclusive");
}

void check_caps(const KPointParams& params, const CoefficientCaps& caps) {
    // Entry coefficients derive from J_i/T_i while the caps use delta
    // itself; the two can differ in the last bits.
    const double grace = 1 + 1e-12;
    for (const auto& e : params.entries)
        if (e.alpha > caps.alpha * grace || e.beta > caps.beta * grace)
            throw std::logic_error("jitter derivation: coefficient cap violated");
}

} // namespace

KPointParams derive_uniform_jitter(const AnalysisProblem& problem, double delta) {
    check_uniform_jitter_pre(problem, delta);
    KPointParams params = derive_jitter(problem, uniform_jitter_values(problem, delta),
                                        SplitRule::jitter_ceiling, false);
    check_caps(params, uniform_jitter_caps(problem.sigma, delta));
    return params;
}

KPointParams derive_uniform_jitter_refined(const AnalysisProblem& problem, double delta) {
    check_uniform_jitter_pre(problem, delta);
    KPointParams params = derive_jitter(problem, uniform_jitter_values(problem, delta),
                                        SplitRule::jitter_ceiling_refined, true);
    check_caps(params, uniform_jitter_refined_caps(problem.sigma, delta));
    return params;
}

KPointParams derive_independent_jitter(const AnalysisProblem& problem) {
    problem.validate();
    require_constrained(problem);
    require_no_inflation(problem, "per-task jitter");
    if (!is_identity(problem.service))
        throw std::invalid_argument("jitter derivation needs an identity service");
    std::vector<double> jitter;
    jitter.reserve(problem.hp.size());
    for (const auto& task : problem.hp) jitter.push_back(task.J);
    return derive_jitter(problem, jitter, SplitRule::independent_jitter, false);
}

CoefficientCaps constant_inflation_caps(double sigma, double b) {
    return {sigma * (1 + b), sigma};
}

CoefficientCaps uniform_jitter_caps(double sigma, double delta) {
    double cd = std::ceil(delta);
    if (!(cd > delta)) throw std::invalid_argument("uniform jitter caps need non-integral delta");
    return {sigma * cd / (cd - delta), sigma / (cd - delta)};
}

CoefficientCaps uniform_jitter_refined_caps(double sigma, double delta) {
    double cd = std::ceil(delta) + 1;
    return {sigma * cd / (cd - delta), sigma / (cd - delta)};
}

CoefficientCaps max_entry_caps(const KPointParams& params, double sigma) {
    CoefficientCaps caps{sigma, sigma};
    for (const auto& e : params.entries) {
        caps.alpha = std::max(caps.alpha, e.alpha);
        caps.beta = std::max(caps.beta, e.beta);
    }
    return caps;
}

} // namespace k2u
