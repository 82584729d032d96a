#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "k2u/analysis.hpp"
#include "k2u/taskgen.hpp"
#include "k2u/tda_oracle.hpp"

namespace k2u::testutil {

struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + unit() * (hi - lo); }
    std::uint64_t below(std::uint64_t n) { return eng() % n; }

    // uniform on the rational grid, never outside [lo, hi]
    double grid_value(double lo, double hi) {
        long long lo_units = static_cast<long long>(std::ceil(lo / kGrid - 1e-9));
        long long hi_units = static_cast<long long>(std::floor(hi / kGrid + 1e-9));
        if (hi_units < lo_units) hi_units = lo_units;
        long long units = lo_units + static_cast<long long>(
                                          below(static_cast<std::uint64_t>(hi_units - lo_units + 1)));
        return static_cast<double>(units) * kGrid;
    }
};

enum class ProblemClass {
    inflation,
    uniform_jitter,
    independent_jitter,
    tdma_segmented,
    tdma_bounded_delay,
};

struct RandomProblem {
    AnalysisProblem problem;
    std::optional<double> delta; // set for the uniform-jitter class
};

// Deterministic random instance of the given test class, on the rational
// grid: constrained-deadline taskset, the lowest-priority task under
// analysis, class-specific sigma/b/jitter/service parameters.
RandomProblem random_problem(ProblemClass cls, std::uint64_t seed);

// Brute-force reference: checks the generalized test on an evenly spaced
// grid of `steps` points over (0, horizon].
bool dense_grid_accepts(const GeneralizedTest& test, int steps = 100000);

// Proof inequality behind every derivation: at each test point t_j the true
// demand of the original test is bounded by the k-point left-hand side.
bool majorization_holds(const KPointParams& params, const AnalysisProblem& problem,
                        std::optional<double> delta, double tol = 1e-9);

} // namespace k2u::testutil
