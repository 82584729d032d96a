#include "k2u/task_model.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

namespace k2u {

void Task::validate() const {
    if (!(C > 0)) throw std::invalid_argument("task " + id + ": C must be > 0");
    if (!(T > 0)) throw std::invalid_argument("task " + id + ": T must be > 0");
    if (!(D > 0)) throw std::invalid_argument("task " + id + ": D must be > 0");
    if (S < 0) throw std::invalid_argument("task " + id + ": S must be >= 0");
    if (J < 0) throw std::invalid_argument("task " + id + ": J must be >= 0");
}

const char* to_string(DeadlineClass c) {
    switch (c) {
    case DeadlineClass::implicit: return "implicit";
    case DeadlineClass::constrained: return "constrained";
    case DeadlineClass::arbitrary: return "arbitrary";
    }
    return "?";
}

DeadlineClass classify(const std::vector<Task>& taskset) {
    if (taskset.empty()) throw std::invalid_argument("empty task set");
    bool all_implicit = true;
    bool all_constrained = true;
    for (const auto& task : taskset) {
        task.validate();
        if (task.D != task.T) all_implicit = false;
        if (task.D > task.T) all_constrained = false;
    }
    if (all_implicit) return DeadlineClass::implicit;
    if (all_constrained) return DeadlineClass::constrained;
    return DeadlineClass::arbitrary;
}

PriorityPolicy priority_policy_from_string(const std::string& name) {
    if (name == "rm" || name == "RM") return PriorityPolicy::rate_monotonic;
    if (name == "dm" || name == "DM") return PriorityPolicy::deadline_monotonic;
    if (name == "as_given") return PriorityPolicy::as_given;
    throw std::invalid_argument("unknown priority policy: " + name);
}

std::vector<Task> assign_priorities(std::vector<Task> taskset, PriorityPolicy policy) {
    if (taskset.empty()) throw std::invalid_argument("empty task set");
    switch (policy) {
    case PriorityPolicy::as_given:
        break;
    case PriorityPolicy::rate_monotonic:
        std::stable_sort(taskset.begin(), taskset.end(), [](const Task& a, const Task& b) {
            return std::tie(a.T, a.C, a.id) < std::tie(b.T, b.C, b.id);
        });
        break;
    case PriorityPolicy::deadline_monotonic:
        std::stable_sort(taskset.begin(), taskset.end(), [](const Task& a, const Task& b) {
            return std::tie(a.D, a.C, a.id) < std::tie(b.D, b.C, b.id);
        });
        break;
    }
    return taskset;
}

void AnalysisProblem::validate() const {
    task_k.validate();
    if (!(sigma > 0)) throw std::invalid_argument("sigma must be > 0");
    if (b < 0) throw std::invalid_argument("b must be >= 0");
    if (extra_Ck < 0) throw std::invalid_argument("extra_Ck must be >= 0");
    if (!hp_inflation.empty() && hp_inflation.size() != hp.size())
        throw std::invalid_argument("hp_inflation must match hp size");
    k2u::validate(service);
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < hp.size(); ++i) {
        hp[i].validate();
        if (hp[i].id == task_k.id)
            throw std::invalid_argument("hp contains the task under analysis");
        if (!seen.insert(hp[i].id).second)
            throw std::invalid_argument("hp contains duplicate task: " + hp[i].id);
        if (hp_b(i) < 0) throw std::invalid_argument("per-task inflation must be >= 0");
    }
}

} // namespace k2u
