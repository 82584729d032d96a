// Times the sweep kernel in serial and OpenMP mode on the same spec and
// checks that both produce identical rows.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "k2u/sweep.hpp"

using namespace k2u;
using clock_type = std::chrono::steady_clock;

namespace {

double time_run(const SweepSpec& spec, ExecutionMode mode, std::vector<SweepRow>& rows) {
    auto start = clock_type::now();
    rows = run_sweep(spec, mode);
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

} // namespace

int main(int argc, char** argv) {
    std::uint64_t trials = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 400;

    SweepSpec spec;
    spec.preset.kind = PresetKind::uni_preemptive;
    spec.gen.n = 8;
    spec.gen.T_min = 1;
    spec.gen.T_max = 1000;
    spec.gen.total_U = 0.5;
    spec.u_values = {0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    spec.trials = trials;
    spec.seed = 42;

    std::vector<SweepRow> serial_rows, parallel_rows;
    double serial_s = time_run(spec, ExecutionMode::serial, serial_rows);
    double parallel_s = time_run(spec, ExecutionMode::openmp, parallel_rows);

    bool identical = serial_rows.size() == parallel_rows.size();
    for (std::size_t i = 0; identical && i < serial_rows.size(); ++i)
        identical = serial_rows[i].total_U == parallel_rows[i].total_U &&
                    serial_rows[i].test == parallel_rows[i].test &&
                    serial_rows[i].accepted == parallel_rows[i].accepted &&
                    serial_rows[i].trials == parallel_rows[i].trials;

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("trials per point: %llu\n", static_cast<unsigned long long>(trials));
    std::printf("serial:  %.3f s\n", serial_s);
    std::printf("openmp:  %.3f s (%d threads)\n", parallel_s, threads);
    std::printf("speedup: %.2fx\n", parallel_s > 0 ? serial_s / parallel_s : 0.0);
    std::printf("results identical: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
