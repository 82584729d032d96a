#pragma once

#include <cstdint>
#include <vector>

#include "k2u/numeric.hpp"
#include "k2u/task_model.hpp"

namespace k2u {

enum class DeadlineModel { implicit, constrained };

// Reproducible random taskset generation: utilizations split UUniFast-style,
// periods log-uniform, everything snapped to the rational grid so that the
// oracle arithmetic stays exact.
struct GenSpec {
    std::size_t n = 1;
    double total_U = 0;          // in (0, n]
    double T_min = 1, T_max = 10;
    DeadlineModel deadline_model = DeadlineModel::implicit;
    double factor_min = 0.5;     // constrained deadlines drawn uniform in
    double factor_max = 1.0;     //   C + factor*(T - C)
    double grid = kGrid;
    std::uint64_t seed = 0;

    void validate() const;
};

// Deterministic for a fixed spec.  C_i is snapped down to the grid (but at
// least one grid unit); utilizations therefore sum to total_U up to grid
// rounding.
std::vector<Task> generate(const GenSpec& spec);

} // namespace k2u
