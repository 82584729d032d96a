#include "k2u/taskgen.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace k2u {

void GenSpec::validate() const {
    if (n < 1) throw std::invalid_argument("taskgen: n must be >= 1");
    if (!(total_U > 0) || total_U > static_cast<double>(n))
        throw std::invalid_argument("taskgen: infeasible spec, total_U must be in (0, n]");
    if (!(T_min > 0) || T_min > T_max)
        throw std::invalid_argument("taskgen: need 0 < T_min <= T_max");
    if (!(grid > 0)) throw std::invalid_argument("taskgen: grid must be > 0");
    if (T_min < grid) throw std::invalid_argument("taskgen: infeasible spec, T_min below grid");
    if (deadline_model == DeadlineModel::constrained &&
        !(factor_min >= 0 && factor_min <= factor_max && factor_max <= 1))
        throw std::invalid_argument("taskgen: need 0 <= factor_min <= factor_max <= 1");
}

namespace {

// mt19937_64 gives a platform-independent stream; the [0,1) mapping is done
// by hand because uniform_real_distribution is implementation-defined.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// classic UUniFast split of total utilization into n unbiased shares
std::vector<double> uunifast(std::size_t n, double total, std::mt19937_64& rng) {
    std::vector<double> shares(n);
    double remaining = total;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double next = remaining * std::pow(next_unit(rng), 1.0 / static_cast<double>(n - i - 1));
        shares[i] = remaining - next;
        remaining = next;
    }
    shares[n - 1] = remaining;
    return shares;
}

} // namespace

std::vector<Task> generate(const GenSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);

    const auto shares = uunifast(spec.n, spec.total_U, rng);

    // work in integer grid units so the emitted values are exact rationals
    const auto to_units = [&](double x) { return std::llround(x / spec.grid); };
    const long long min_T_units = to_units(spec.T_min);
    const long long max_T_units = to_units(spec.T_max);

    std::vector<Task> taskset(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        Task& task = taskset[i];
        task.id = "t" + std::to_string(i + 1);

        double raw_T = spec.T_min * std::exp(next_unit(rng) * std::log(spec.T_max / spec.T_min));
        long long T_units = std::clamp(to_units(raw_T), min_T_units, max_T_units);
        task.T = static_cast<double>(T_units) * spec.grid;

        // C snapped down, at least one grid unit; shares above 1 are kept so
        // the utilizations still sum to total_U up to rounding
        long long C_units = static_cast<long long>(
            std::floor(shares[i] * static_cast<double>(T_units) + 1e-12));
        C_units = std::max(C_units, 1LL);
        task.C = static_cast<double>(C_units) * spec.grid;

        long long D_units = T_units;
        if (spec.deadline_model == DeadlineModel::constrained && C_units < T_units) {
            double f = spec.factor_min + next_unit(rng) * (spec.factor_max - spec.factor_min);
            double raw_D = task.C + f * (task.T - task.C);
            D_units = std::clamp(to_units(raw_D), C_units, T_units);
        }
        task.D = static_cast<double>(D_units) * spec.grid;
        task.validate();
    }
    return taskset;
}

} // namespace k2u
