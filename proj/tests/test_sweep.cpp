#include <catch2/catch_amalgamated.hpp>

#include "k2u/sweep.hpp"

using namespace k2u;

namespace {

SweepSpec small_spec() {
    SweepSpec spec;
    spec.preset.kind = PresetKind::uni_preemptive;
    spec.gen.n = 4;
    spec.gen.T_min = 1;
    spec.gen.T_max = 50;
    spec.gen.total_U = 0.5;
    spec.u_values = {0.3, 0.5, 0.7, 0.9};
    spec.trials = 150;
    spec.seed = 12345;
    return spec;
}

} // namespace

TEST_CASE("serial and OpenMP sweeps are bit-identical") {
    auto spec = small_spec();
    auto serial = run_sweep(spec, ExecutionMode::serial);
    auto parallel = run_sweep(spec, ExecutionMode::openmp);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].total_U == parallel[i].total_U);
        CHECK(serial[i].test == parallel[i].test);
        CHECK(serial[i].accepted == parallel[i].accepted);
        CHECK(serial[i].trials == parallel[i].trials);
    }
}

TEST_CASE("rows are ordered and the CSV header is stable") {
    auto rows = run_sweep(small_spec(), ExecutionMode::openmp);
    REQUIRE(rows.size() == 4 * 5);
    const auto& names = sweep_test_names();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].test == names[i % names.size()]);
        if (i >= names.size()) CHECK(rows[i].total_U >= rows[i - names.size()].total_U);
    }
    auto csv = sweep_to_csv(rows);
    CHECK(csv.rfind("total_U,test,accepted,trials\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 21); // header + 20 rows
}

TEST_CASE("no polynomial test out-accepts the oracle in a sweep") {
    auto rows = run_sweep(small_spec(), ExecutionMode::openmp);
    for (std::size_t block = 0; block < rows.size(); block += 5) {
        std::uint64_t tda = rows[block + 4].accepted;
        REQUIRE(rows[block + 4].test == "tda");
        for (std::size_t i = 0; i < 4; ++i) CHECK(rows[block + i].accepted <= tda);
    }
}

TEST_CASE("oracle acceptance is non-increasing in total utilization") {
    // same trial seeds at every utilization level: each instance only scales
    // up, so per-trial verdicts can only flip one way
    auto spec = small_spec();
    auto rows = run_sweep(spec, ExecutionMode::openmp);
    for (std::size_t i = 5 + 4; i < rows.size(); i += 5) {
        REQUIRE(rows[i].test == "tda");
        CHECK(rows[i].accepted <= rows[i - 5].accepted);
    }
}

TEST_CASE("light load is accepted almost always") {
    SweepSpec spec = small_spec();
    spec.gen.n = 2;
    spec.u_values = {0.1};
    spec.trials = 200;
    auto rows = run_sweep(spec, ExecutionMode::openmp);
    for (const auto& row : rows) CHECK(row.accepted >= 195);
}
