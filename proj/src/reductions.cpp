#include "k2u/reductions.hpp"

#include <stdexcept>

namespace k2u {

AnalysisProblem reduce_segmented(const AnalysisProblem& problem) {
    problem.validate();
    const auto* seg = std::get_if<SegmentedService>(&problem.service);
    if (!seg) throw std::invalid_argument("reduce_segmented: service is not segmented");

    // Per-cycle service gap, expressed as execution time under the problem's
    // interference multiplier.
    const double C_virtual = (seg->T_cycle - seg->sigma * seg->C_slot) / problem.sigma;
    if (C_virtual < 0) throw std::invalid_argument("reduce_segmented: negative service gap");

    AnalysisProblem reduced = problem;
    reduced.service = IdentityService{};
    if (C_virtual == 0) return reduced; // full bandwidth, nothing to move

    Task virtual_task;
    virtual_task.id = kServiceTaskId;
    virtual_task.C = C_virtual;
    virtual_task.T = seg->T_cycle;
    virtual_task.D = seg->T_cycle;

    const double borrowed = problem.sigma * problem.b * C_virtual;
    if (problem.base_Ck() - borrowed > 0 && problem.hp_inflation.empty()) {
        // Inflate the virtual task like every other hp task and pay for it
        // out of C_k; keeps the inflation uniform.
        if (problem.extra_Ck >= borrowed) {
            reduced.extra_Ck = problem.extra_Ck - borrowed;
        } else {
            reduced.extra_Ck = 0;
            reduced.task_k.C = problem.task_k.C - (borrowed - problem.extra_Ck);
        }
        reduced.hp.push_back(virtual_task);
    } else {
        // Not enough C_k to borrow from: leave the virtual task uninflated.
        reduced.hp_inflation.assign(problem.hp.size(), 0.0);
        for (std::size_t i = 0; i < problem.hp.size(); ++i)
            reduced.hp_inflation[i] = problem.hp_b(i);
        reduced.hp.push_back(virtual_task);
        reduced.hp_inflation.push_back(0.0);
    }
    return reduced;
}

AnalysisProblem reduce_bounded_delay(const AnalysisProblem& problem) {
    problem.validate();
    const auto* bd = std::get_if<BoundedDelayService>(&problem.service);
    if (!bd) throw std::invalid_argument("reduce_bounded_delay: service is not bounded-delay");
    if (bd->t_delay >= problem.task_k.D)
        throw std::invalid_argument("reduce_bounded_delay: t_delay >= D_k, test can never pass");

    AnalysisProblem reduced = problem;
    reduced.service = IdentityService{};
    reduced.task_k.C = (problem.base_Ck() + bd->gamma * bd->t_delay) / bd->gamma;
    reduced.extra_Ck = 0;
    reduced.sigma = problem.sigma / bd->gamma;
    return reduced;
}

} // namespace k2u
