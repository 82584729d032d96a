#include "k2u/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace k2u {

using nlohmann::json;

std::vector<Task> taskset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("tasks") || !j["tasks"].is_array())
        throw std::invalid_argument("taskset JSON: expected {\"tasks\": [...]}");
    std::vector<Task> taskset;
    for (const auto& item : j["tasks"]) {
        Task task;
        if (!item.contains("id") || !item["id"].is_string())
            throw std::invalid_argument("taskset JSON: task without string id");
        task.id = item["id"].get<std::string>();
        if (!item.contains("C") || !item.contains("T"))
            throw std::invalid_argument("task " + task.id + ": C and T are required");
        task.C = item["C"].get<double>();
        task.T = item["T"].get<double>();
        task.D = item.contains("D") ? item["D"].get<double>() : task.T;
        task.S = item.value("S", 0.0);
        task.J = item.value("J", 0.0);
        task.validate();
        taskset.push_back(std::move(task));
    }
    return taskset;
}

json taskset_to_json(const std::vector<Task>& taskset) {
    json tasks = json::array();
    for (const auto& task : taskset) {
        json t{{"id", task.id}, {"C", task.C}, {"T", task.T}, {"D", task.D}};
        if (task.S != 0) t["S"] = task.S;
        if (task.J != 0) t["J"] = task.J;
        tasks.push_back(std::move(t));
    }
    return json{{"tasks", std::move(tasks)}};
}

std::vector<Task> load_taskset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open taskset file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("malformed JSON in " + path + ": " + e.what());
    }
    return taskset_from_json(j);
}

namespace {

json verdict_to_json(const TestVerdict& v) {
    return json{{"verdict", v.ok() ? "schedulable" : "unknown"},
                {"test", v.test},
                {"witness", v.witness}};
}

json params_to_json(const KPointParams& p) {
    json entries = json::array();
    for (const auto& e : p.entries)
        entries.push_back(json{{"task", e.task_id},
                               {"t", e.t},
                               {"alpha", e.alpha},
                               {"beta", e.beta},
                               {"U", e.U}});
    return json{{"t_k", p.t_k},
                {"C_k_eff", p.C_k_eff},
                {"entries", std::move(entries)},
                {"hp2", p.hp2_ids()},
                {"split_rule", to_string(p.split.rule)}};
}

json derived_to_json(const DerivedVerdicts& d) {
    return json{{"params", params_to_json(d.params)},
                {"alpha_cap", d.caps.alpha},
                {"beta_cap", d.caps.beta},
                {"hyperbolic", verdict_to_json(d.hyperbolic)},
                {"log_util", verdict_to_json(d.log_utilization)},
                {"general", verdict_to_json(d.general)},
                {"kpoint", verdict_to_json(d.kpoint)}};
}

} // namespace

json report_to_json(const TaskReport& report) {
    json j{{"task", report.task_id}, {"primary", derived_to_json(report.primary)}};
    if (report.refined) j["refined"] = derived_to_json(*report.refined);
    if (report.oracle) j["tda"] = verdict_to_json(*report.oracle);
    return j;
}

json reports_to_json(const std::vector<TaskReport>& reports) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    return json{{"tasks", std::move(arr)}};
}

} // namespace k2u
