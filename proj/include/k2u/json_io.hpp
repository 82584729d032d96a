#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "k2u/analysis.hpp"
#include "k2u/task_model.hpp"

namespace k2u {

// Taskset schema:
//   {"tasks":[{"id":str,"C":num,"T":num,"D":num?,"S":num?,"J":num?}]}
// D defaults to T when absent.
std::vector<Task> taskset_from_json(const nlohmann::json& j);
nlohmann::json taskset_to_json(const std::vector<Task>& taskset);

std::vector<Task> load_taskset_file(const std::string& path);

nlohmann::json report_to_json(const TaskReport& report);
nlohmann::json reports_to_json(const std::vector<TaskReport>& reports);

} // namespace k2u
