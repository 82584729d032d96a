#include <catch2/catch_amalgamated.hpp>

#include "k2u/tda_oracle.hpp"
#include "testutil.hpp"

using namespace k2u;
using Catch::Approx;

namespace {

Task make(std::string id, double C, double T, double D = 0) {
    Task t;
    t.id = std::move(id);
    t.C = C;
    t.T = T;
    t.D = D > 0 ? D : T;
    return t;
}

} // namespace

TEST_CASE("candidate points") {
    GeneralizedTest plain;
    plain.C_k_eff = 1;
    plain.terms = {{1, 2, 0, 0, 1}};
    plain.horizon = 5;
    CHECK(candidate_points(plain) == std::vector<double>{2, 4, 5});

    GeneralizedTest jittered;
    jittered.C_k_eff = 1;
    jittered.terms = {{1, 4, 2, 0, 1}};
    jittered.horizon = 10;
    CHECK(candidate_points(jittered) == std::vector<double>{2, 6, 10});

    GeneralizedTest served;
    served.C_k_eff = 1;
    served.terms = {{1, 4, 0, 0, 1}};
    served.service = SegmentedService{5, 2, 1};
    served.horizon = 10;
    CHECK(candidate_points(served) == std::vector<double>{4, 5, 8, 10});
}

TEST_CASE("oracle verdicts") {
    // demand 1+2+1 = 4 at t=4
    GeneralizedTest fits;
    fits.C_k_eff = 1;
    fits.terms = {{1, 2, 0, 0, 1}, {1, 4, 0, 0, 1}};
    fits.horizon = 8;
    auto verdict = tda_accepts(fits);
    CHECK(verdict.ok());
    CHECK(verdict.witness == 4.0);

    // suspension-style jitter: accepts inside the window
    GeneralizedTest suspended;
    suspended.C_k_eff = 1.5;
    suspended.terms = {{1, 4, 3, 0, 1}};
    suspended.horizon = 10;
    CHECK(tda_accepts(suspended).ok());
    CHECK(demand_at(suspended, 10) == Approx(5.5));

    // overload: demand exceeds every point
    GeneralizedTest overload;
    overload.C_k_eff = 3;
    overload.terms = {{2, 2, 0, 0, 1}};
    overload.horizon = 4;
    CHECK_FALSE(tda_accepts(overload).ok());
}

TEST_CASE("response-time fixed point") {
    auto wcrt = wcrt_fixed_point(make("k", 1, 8), {make("a", 1, 2), make("b", 1, 4)});
    REQUIRE(wcrt.has_value());
    CHECK(*wcrt == 4.0);

    auto alone = wcrt_fixed_point(make("k", 2, 9), {});
    REQUIRE(alone.has_value());
    CHECK(*alone == 2.0);

    auto tight = wcrt_fixed_point(make("k", 1, 2), {make("a", 1, 2)});
    REQUIRE(tight.has_value());
    CHECK(*tight == 2.0);

    auto diverges = wcrt_fixed_point(make("k", 1, 2), {make("a", 1, 2), make("b", 1, 4)});
    CHECK_FALSE(diverges.has_value());
}

TEST_CASE("fixed point agrees with the oracle on the plain uniprocessor test") {
    testutil::Rng rng(31);
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        auto inst = testutil::random_problem(testutil::ProblemClass::inflation, seed);
        inst.problem.sigma = 1;
        inst.problem.b = 0;
        inst.problem.extra_Ck = 0;

        auto wcrt = wcrt_fixed_point(inst.problem.task_k, inst.problem.hp);
        bool accepted = tda_accepts(original_test(inst.problem)).ok();
        CHECK(wcrt.has_value() == accepted);
        if (wcrt) CHECK(*wcrt <= inst.problem.task_k.D + kOracleSlackTol);
    }
}

TEST_CASE("demand is non-decreasing along candidate points") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto inst = testutil::random_problem(testutil::ProblemClass::independent_jitter, seed);
        auto test = original_test(inst.problem);
        double prev = 0;
        for (double t : candidate_points(test)) {
            double demand = demand_at(test, t);
            CHECK(demand >= prev - 1e-12);
            prev = demand;
        }
    }
}

TEST_CASE("dense grid acceptance implies candidate-point acceptance") {
    using testutil::ProblemClass;
    int grid_accepts = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        for (auto cls : {ProblemClass::inflation, ProblemClass::independent_jitter,
                         ProblemClass::tdma_segmented, ProblemClass::tdma_bounded_delay}) {
            auto inst = testutil::random_problem(cls, seed);
            auto test = original_test(inst.problem, inst.delta);
            if (testutil::dense_grid_accepts(test, 20000)) {
                ++grid_accepts;
                CHECK(tda_accepts(test).ok());
            }
        }
    }
    CHECK(grid_accepts > 50);
}
