#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bgt/generators.hpp"
#include "bgt/pw_classic.hpp"

using bgt::Rat;

namespace {
const char* kExample16 =
    "1, 0.83, 0.6, 0.55, 0.45, 0.4, 0.32, 0.29, 0.28, 0.27, 0.26, 0.22, 0.16, 0.15, 0.1, 0.05";
}

TEST_CASE("power-of-two rounding") {
    auto r = bgt::round_up_pow2(Rat(83, 100));
    CHECK(r.h_prime == 1);
    CHECK(r.deadline == 1);
    CHECK(bgt::round_up_pow2(Rat(9, 20)).h_prime == Rat(1, 2));
    CHECK(bgt::round_up_pow2(Rat(11, 50)).h_prime == Rat(1, 4));
    CHECK(bgt::round_up_pow2(Rat(1, 20)).h_prime == Rat(1, 16));
    // exact powers of two stay put
    CHECK(bgt::round_up_pow2(Rat(1, 4)).h_prime == Rat(1, 4));
    CHECK(bgt::round_up_pow2(Rat(1, 4)).deadline == 4);
    CHECK(bgt::round_up_pow2(Rat(1)).deadline == 1);
    CHECK_THROWS_AS(bgt::round_up_pow2(Rat(0)), std::domain_error);
    CHECK_THROWS_AS(bgt::round_up_pow2(Rat(3, 2)), std::domain_error);
}

TEST_CASE("16-bamboo example: nine partitions, value 9") {
    auto plan = bgt::build_plan_pw(bgt::parse_instance(kExample16));
    CHECK(plan.alpha() == 9);
    CHECK(plan.z == 9);
    CHECK(bgt::plan_partition_string(plan) ==
          "P1:[b1] P2:[b2] P3:[b3] P4:[b4] P5:[b5,b6] P6:[b7,b8] P7:[b9,b10] "
          "P8:[b11,b12,b13] P9:[b14,b15,b16]");
    // every bin except possibly the last is exactly full in h'
    for (size_t i = 0; i + 1 < plan.partitions.size(); ++i)
        CHECK(plan.partitions[i].mod_sum() == 1);
}

TEST_CASE("value never exceeds twice the total growth") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        for (auto prof : {bgt::Profile::Uniform, bgt::Profile::Dyadic, bgt::Profile::S2Heavy}) {
            auto inst = bgt::gen_random(12, seed, prof);
            auto [norm, scale] = bgt::normalize(inst);
            auto plan = bgt::build_plan_pw(norm);
            Rat total = 0;
            for (const auto& h : norm.growths) total += h;
            CHECK(plan.z <= 2 * total);
        }
    }
}

TEST_CASE("tight family gets n+1 partitions") {
    for (int n = 2; n <= 12; n += 2) {
        auto plan = bgt::build_plan_pw(bgt::gen_tight_family(n, Rat(1, 100)));
        CHECK(plan.alpha() == n + 1);
        CHECK(plan.z == n + 1);
    }
}

TEST_CASE("requires a normalized instance") {
    CHECK_THROWS(bgt::build_plan_pw(bgt::parse_instance("2, 1")));
}

TEST_CASE("every bamboo lands in exactly one partition") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto inst = bgt::gen_random(2 + static_cast<int>(rng() % 20), rng(), bgt::Profile::Uniform);
        auto plan = bgt::build_plan_pw(inst);
        std::vector<int> seen(static_cast<size_t>(inst.n()), 0);
        for (const auto& p : plan.partitions)
            for (const auto& m : p.members) ++seen[static_cast<size_t>(m.bamboo)];
        for (int c : seen) CHECK(c == 1);
    }
}
