#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace k2u {

// Every test here is sufficient only: "unknown" never proves a deadline
// miss.
enum class Verdict { schedulable, unknown };

struct TestVerdict {
    Verdict verdict = Verdict::unknown;
    std::string test;    // which condition fired
    double witness = 0;  // satisfying t_j for point tests, slack (rhs - lhs) for bound tests

    bool ok() const { return verdict == Verdict::schedulable; }
};

enum class SplitRule { period_vs_dk, jitter_ceiling, jitter_ceiling_refined, independent_jitter };

const char* to_string(SplitRule rule);

// Which higher-priority tasks kept their own test point (hp1) and which were
// absorbed into the effective C_k as a constant (hp2).
struct SplitRecord {
    std::vector<std::string> hp1;
    std::vector<std::string> hp2;
    SplitRule rule = SplitRule::period_vs_dk;
};

struct KPointEntry {
    std::string task_id;
    double t = 0;     // test point, 0 < t <= t_k
    double alpha = 0; // > 0
    double beta = 0;  // > 0
    double U = 0;     // > 0
};

// A fully instantiated k-point test: k-1 higher-priority entries sorted by
// non-decreasing test point, the final point t_k, and the effective C_k
// after hp2 absorption.
struct KPointParams {
    double t_k = 0;
    double C_k_eff = 0;
    std::vector<KPointEntry> entries;
    SplitRecord split;

    const std::vector<std::string>& hp2_ids() const { return split.hp2; }

    // Throws std::invalid_argument; out-of-order entries report
    // "index order violated".
    void validate() const;
};

// Direct evaluation of the k-point condition: accepts iff some prefix j
// satisfies C_k_eff + sum_i alpha_i t_i U_i + sum_{i<j} beta_i t_i U_i <= t_j.
// Witness is the first satisfying t_j.
TestVerdict evaluate_kpoint(const KPointParams& params);

// Hyperbolic condition with uniform coefficient bounds alpha >= alpha_i,
// beta >= beta_i:
//   C_k_eff/t_k <= (alpha/beta + 1) / prod_j (beta U_j + 1) - alpha/beta.
TestVerdict hyperbolic_test(const KPointParams& params, double alpha, double beta);

// Total-utilization condition with uniform coefficient bounds:
//   C_k_eff/t_k + sum U_i <= capacity_bound(k, alpha, beta).
TestVerdict capacity_test(const KPointParams& params, double alpha, double beta);

// Right-hand side of the capacity condition,
//   ((k-1)((alpha+beta)^{1/k} - 1) + ((alpha+beta)^{1/k} - alpha)) / beta.
// With alpha = beta = 1 this is exactly k(2^{1/k} - 1).
double capacity_bound(std::size_t k, double alpha, double beta);

// Logarithmic condition with uniform coefficient bounds:
//   beta * sum U_i <= ln((alpha/beta + 1) / (C_k_eff/t_k + alpha/beta)).
TestVerdict log_utilization_test(const KPointParams& params, double alpha, double beta);

// Per-task-coefficient condition, evaluated in stored entry order:
//   C_k_eff/t_k <= 1 - sum_i U_i(alpha_i+beta_i) / prod_{j>=i} (beta_j U_j + 1).
TestVerdict general_test(const KPointParams& params);

} // namespace k2u
