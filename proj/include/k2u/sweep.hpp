#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "k2u/analysis.hpp"
#include "k2u/presets.hpp"
#include "k2u/taskgen.hpp"

namespace k2u {

// Acceptance-ratio experiment: for each total utilization on the grid,
// generate `trials` tasksets and count, per test, how many of them every
// task passes.

// Fixed column order of the per-test results.
const std::vector<std::string>& sweep_test_names();

struct SweepSpec {
    Preset preset;
    GenSpec gen;                  // total_U and seed are overridden per trial
    std::vector<double> u_values; // utilization grid
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    PriorityPolicy policy = PriorityPolicy::rate_monotonic;
    std::optional<double> delta;  // uniform-jitter sweeps
};

struct SweepRow {
    double total_U = 0;
    std::string test;
    std::uint64_t accepted = 0;
    std::uint64_t trials = 0;
};

enum class ExecutionMode { serial, openmp };

// Rows come out ordered by (total_U, test) with the fixed test order above.
// Trial seeds are derived from (seed, u index, trial index), so both modes
// produce bit-identical rows; the serial mode is the reference the parallel
// kernel is tested against.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, ExecutionMode mode);

// CSV with the stable header "total_U,test,accepted,trials".
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

} // namespace k2u
