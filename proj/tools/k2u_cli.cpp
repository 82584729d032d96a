#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "k2u/analysis.hpp"
#include "k2u/json_io.hpp"
#include "k2u/sweep.hpp"

namespace {

using namespace k2u;

struct CommonOpts {
    std::string preset_name = "uni_preemptive";
    std::string policy = "as_given";
    std::string format = "text";
    std::string out;
    double sigma = 1.0;
    double b = 0.0;
    std::optional<double> delta;
    std::optional<int> M;
    std::optional<double> tcycle, cslot, gamma, tdelay;
    double extra_ck = 0.0;
};

void add_common_flags(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--preset", opts.preset_name,
                    "scenario preset (uni_preemptive, uni_nonpreemptive, bursty, mp_global, "
                    "mp_partitioned, tdma_segmented, tdma_bounded_delay, self_suspending_uni)");
    cmd->add_option("--policy", opts.policy, "priority order: rm, dm or as_given");
    cmd->add_option("--sigma", opts.sigma, "interference multiplier");
    cmd->add_option("--b", opts.b, "constant inflation per higher-priority task");
    cmd->add_option("--delta", opts.delta, "uniform arrival-jitter ratio");
    cmd->add_option("--M", opts.M, "processor count for mp presets");
    cmd->add_option("--tcycle", opts.tcycle, "TDMA cycle length");
    cmd->add_option("--cslot", opts.cslot, "TDMA slot length");
    cmd->add_option("--gamma", opts.gamma, "bounded-delay service slope");
    cmd->add_option("--tdelay", opts.tdelay, "bounded-delay service offset");
    cmd->add_option("--extra-ck", opts.extra_ck, "additive C_k term (blocking, DAG adjustment)");
    cmd->add_option("--out", opts.out, "write output to file instead of stdout");
    cmd->add_option("--format", opts.format, "output format: text or json");
}

Preset make_preset(const CommonOpts& opts) {
    Preset preset;
    preset.kind = preset_from_string(opts.preset_name);
    preset.config.sigma = opts.sigma;
    preset.config.M = opts.M;
    preset.config.T_cycle = opts.tcycle;
    preset.config.C_slot = opts.cslot;
    preset.config.gamma = opts.gamma;
    preset.config.t_delay = opts.tdelay;
    preset.config.extra_Ck = opts.extra_ck;
    if (preset.kind == PresetKind::bursty) preset.config.b_burst = opts.b;
    return preset;
}

std::vector<TaskReport> run_analysis(const CommonOpts& opts, const std::string& taskset_file) {
    std::vector<Task> taskset = load_taskset_file(taskset_file);
    taskset = assign_priorities(taskset, priority_policy_from_string(opts.policy));
    Preset preset = make_preset(opts);
    AnalyzeOptions options;
    options.delta = opts.delta;

    std::vector<TaskReport> reports = analyze_taskset(preset, taskset, options);
    // plain --b outside the bursty preset: rebuild with inflation applied
    if (opts.b != 0 && preset.kind != PresetKind::bursty) {
        reports.clear();
        for (std::size_t k = 0; k < taskset.size(); ++k) {
            AnalysisProblem problem = build_problem(preset, taskset, k);
            problem.b = opts.b;
            reports.push_back(analyze_task(problem, options));
        }
    }
    return reports;
}

void write_output(const CommonOpts& opts, const std::string& body) {
    if (opts.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(opts.out);
    if (!out) throw std::runtime_error("cannot open output file: " + opts.out);
    out << body;
}

const char* mark(const TestVerdict& v) { return v.ok() ? "yes" : "-"; }

std::string report_text(const std::vector<TaskReport>& reports) {
    std::string text;
    char line[256];
    std::snprintf(line, sizeof line, "%-12s %-11s %-9s %-8s %-7s %-5s\n", "task", "hyperbolic",
                  "log_util", "general", "kpoint", "tda");
    text += line;
    for (const auto& r : reports) {
        const auto& p = r.primary;
        std::snprintf(line, sizeof line, "%-12s %-11s %-9s %-8s %-7s %-5s\n", r.task_id.c_str(),
                      mark(p.hyperbolic), mark(p.log_utilization), mark(p.general),
                      mark(p.kpoint), r.oracle ? mark(*r.oracle) : "n/a");
        text += line;
        for (const auto& e : p.params.entries) {
            std::snprintf(line, sizeof line,
                          "    %-10s t=%-10.6g alpha=%-10.6g beta=%-10.6g U=%-10.6g\n",
                          e.task_id.c_str(), e.t, e.alpha, e.beta, e.U);
            text += line;
        }
        if (r.refined) {
            std::snprintf(line, sizeof line,
                          "    refined:   %-11s %-9s %-8s %-7s\n", mark(r.refined->hyperbolic),
                          mark(r.refined->log_utilization), mark(r.refined->general),
                          mark(r.refined->kpoint));
            text += line;
        }
    }
    return text;
}

int cmd_analyze(const CommonOpts& opts, const std::string& taskset_file) {
    std::vector<TaskReport> reports = run_analysis(opts, taskset_file);
    if (opts.format == "json")
        write_output(opts, reports_to_json(reports).dump(2) + "\n");
    else
        write_output(opts, report_text(reports));
    return 0;
}

int cmd_compare(const CommonOpts& opts, const std::string& taskset_file) {
    std::vector<TaskReport> reports = run_analysis(opts, taskset_file);
    std::uint64_t both = 0, oracle_only = 0, neither = 0, forbidden = 0;
    for (const auto& r : reports) {
        const bool oracle_ok = r.oracle->ok();
        for (const TestVerdict* v :
             {&r.primary.hyperbolic, &r.primary.log_utilization, &r.primary.general,
              &r.primary.kpoint}) {
            if (v->ok() && oracle_ok) ++both;
            else if (!v->ok() && oracle_ok) ++oracle_only;
            else if (!v->ok() && !oracle_ok) ++neither;
            else ++forbidden;
        }
    }
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "accept/accept:   %llu\nunknown/accept:  %llu\nunknown/unknown: %llu\n"
                  "accept/unknown:  %llu (forbidden)\n",
                  static_cast<unsigned long long>(both),
                  static_cast<unsigned long long>(oracle_only),
                  static_cast<unsigned long long>(neither),
                  static_cast<unsigned long long>(forbidden));
    write_output(opts, buf);
    return forbidden == 0 ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-point schedulability tests with automatic parameter derivation"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string taskset_file;

    CLI::App* analyze = app.add_subcommand("analyze", "per-task verdicts for a taskset file");
    analyze->add_option("taskset", taskset_file, "taskset JSON file")->required();
    add_common_flags(analyze, opts);

    CLI::App* compare =
        app.add_subcommand("compare", "agreement of the polynomial tests with the TDA oracle");
    compare->add_option("taskset", taskset_file, "taskset JSON file")->required();
    add_common_flags(compare, opts);

    CLI::App* sweep = app.add_subcommand("sweep", "acceptance-ratio sweep over total utilization");
    std::uint64_t trials = 200, seed = 1;
    std::size_t n_tasks = 5;
    double u_min = 0.5, u_max = 1.0, u_step = 0.1;
    double t_min = 1, t_max = 100;
    std::string deadline_model = "implicit";
    double dfactor_min = 0.5, dfactor_max = 1.0;
    bool serial = false;
    add_common_flags(sweep, opts);
    sweep->add_option("--n", n_tasks, "tasks per generated set");
    sweep->add_option("--trials", trials, "tasksets per utilization point");
    sweep->add_option("--seed", seed, "master seed");
    sweep->add_option("--umin", u_min, "first total utilization");
    sweep->add_option("--umax", u_max, "last total utilization");
    sweep->add_option("--ustep", u_step, "utilization step");
    sweep->add_option("--tmin", t_min, "minimum period");
    sweep->add_option("--tmax", t_max, "maximum period");
    sweep->add_option("--deadline-model", deadline_model, "implicit or constrained");
    sweep->add_option("--dfactor-min", dfactor_min, "constrained deadline factor lower bound");
    sweep->add_option("--dfactor-max", dfactor_max, "constrained deadline factor upper bound");
    sweep->add_flag("--serial", serial, "run the serial reference instead of OpenMP");

    CLI::App* gen = app.add_subcommand("gen", "emit a random taskset as JSON");
    std::size_t gen_n = 5;
    double gen_u = 0.7;
    std::uint64_t gen_seed = 1;
    double gen_tmin = 1, gen_tmax = 100;
    std::string gen_deadline_model = "implicit";
    gen->add_option("--n", gen_n, "task count");
    gen->add_option("--total-u", gen_u, "total utilization");
    gen->add_option("--seed", gen_seed, "seed");
    gen->add_option("--tmin", gen_tmin, "minimum period");
    gen->add_option("--tmax", gen_tmax, "maximum period");
    gen->add_option("--deadline-model", gen_deadline_model, "implicit or constrained");
    gen->add_option("--out", opts.out, "write output to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(opts, taskset_file);
        if (app.got_subcommand(compare)) return cmd_compare(opts, taskset_file);
        if (app.got_subcommand(sweep)) {
            SweepSpec spec;
            spec.preset = make_preset(opts);
            spec.gen.n = n_tasks;
            spec.gen.T_min = t_min;
            spec.gen.T_max = t_max;
            spec.gen.deadline_model = deadline_model == "constrained" ? DeadlineModel::constrained
                                                                      : DeadlineModel::implicit;
            spec.gen.factor_min = dfactor_min;
            spec.gen.factor_max = dfactor_max;
            spec.gen.total_U = u_min; // placeholder, swept below
            for (double u = u_min; u <= u_max + 1e-9; u += u_step) spec.u_values.push_back(u);
            spec.trials = trials;
            spec.seed = seed;
            spec.policy = priority_policy_from_string(opts.policy);
            spec.delta = opts.delta;
            auto rows = run_sweep(spec, serial ? ExecutionMode::serial : ExecutionMode::openmp);
            write_output(opts, sweep_to_csv(rows));
            return 0;
        }
        if (app.got_subcommand(gen)) {
            GenSpec spec;
            spec.n = gen_n;
            spec.total_U = gen_u;
            spec.T_min = gen_tmin;
            spec.T_max = gen_tmax;
            spec.deadline_model = gen_deadline_model == "constrained" ? DeadlineModel::constrained
                                                                      : DeadlineModel::implicit;
            spec.seed = gen_seed;
            CommonOpts gen_opts;
            gen_opts.out = opts.out;
            write_output(gen_opts, taskset_to_json(generate(spec)).dump(2) + "\n");
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
