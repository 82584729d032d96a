#include "k2u/tda_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "k2u/numeric.hpp"

namespace k2u {

void GeneralizedTest::validate() const {
    if (!(horizon > 0)) throw std::invalid_argument("horizon must be > 0");
    if (!(C_k_eff > 0)) throw std::invalid_argument("C_k_eff must be > 0");
    k2u::validate(service);
    for (const auto& term : terms) {
        if (!(term.C > 0) || !(term.T > 0))
            throw std::invalid_argument("demand term: C and T must be > 0");
        if (term.J < 0 || term.b < 0 || !(term.sigma > 0))
            throw std::invalid_argument("demand term: need J >= 0, b >= 0, sigma > 0");
    }
}

double demand_at(const GeneralizedTest& test, double t) {
    double demand = test.C_k_eff;
    for (const auto& term : test.terms)
        demand += term.sigma * (snapped_ceil((t + term.J) / term.T) * term.C + term.b * term.C);
    return demand;
}

std::vector<double> candidate_points(const GeneralizedTest& test) {
    test.validate();
    std::vector<double> points;
    points.push_back(test.horizon);

    for (const auto& term : test.terms) {
        // releases m*T - J inside (0, horizon]
        double m = std::max(1.0, snapped_floor(term.J / term.T) + 1);
        for (;; m += 1) {
            double t = m * term.T - term.J;
            // guard against a rounding-noise point at t ~ 0
            if (t <= kOracleSlackTol) continue;
            if (t > test.horizon) break;
            points.push_back(t);
        }
    }

    double cycle = 0;
    if (const auto* seg = std::get_if<SegmentedService>(&test.service))
        cycle = seg->T_cycle;
    else if (const auto* tdma = std::get_if<ExactTdmaService>(&test.service))
        cycle = tdma->T_cycle;
    if (cycle > 0)
        for (double m = 1;; m += 1) {
            double t = m * cycle;
            if (t > test.horizon) break;
            points.push_back(t);
        }

    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end(),
                             [](double a, double b) { return std::fabs(a - b) <= 1e-12; }),
                 points.end());
    return points;
}

TestVerdict tda_accepts(const GeneralizedTest& test) {
    double worst_slack = -std::numeric_limits<double>::infinity();
    for (double t : candidate_points(test)) {
        double slack = service_value(test.service, t) - demand_at(test, t);
        if (slack >= -kOracleSlackTol) return {Verdict::schedulable, "tda", t};
        worst_slack = std::max(worst_slack, slack);
    }
    return {Verdict::unknown, "tda", worst_slack};
}

std::optional<double> wcrt_fixed_point(const Task& task_k, const std::vector<Task>& hp) {
    task_k.validate();
    const double horizon = task_k.D;
    double R = task_k.C;
    for (;;) {
        double next = task_k.C;
        for (const auto& task : hp) next += snapped_ceil(R / task.T) * task.C;
        if (next > horizon + kOracleSlackTol) return std::nullopt;
        if (next == R) return R;
        R = next;
    }
}

GeneralizedTest original_test(const AnalysisProblem& problem, std::optional<double> delta) {
    problem.validate();
    GeneralizedTest test;
    test.C_k_eff = problem.base_Ck();
    test.service = problem.service;
    test.horizon = problem.task_k.D;
    test.terms.reserve(problem.hp.size());
    for (std::size_t i = 0; i < problem.hp.size(); ++i) {
        const Task& task = problem.hp[i];
        DemandTerm term;
        term.C = task.C;
        term.T = task.T;
        term.sigma = problem.sigma;
        if (delta) {
            term.J = *delta * task.T;
            term.b = 0;
        } else {
            term.J = task.J;
            term.b = problem.hp_b(i);
        }
        test.terms.push_back(term);
    }
    return test;
}

} // namespace k2u
