#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bgt/bounds.hpp"
#include "bgt/instance.hpp"
#include "bgt/rational.hpp"

using bgt::Rat;

TEST_CASE("rational parsing: integers, fractions, decimals") {
    CHECK(bgt::parse_rat("3") == Rat(3));
    CHECK(bgt::parse_rat("5/6") == Rat(5, 6));
    CHECK(bgt::parse_rat("0.83") == Rat(83, 100));
    CHECK(bgt::parse_rat("0.05") == Rat(1, 20));
    CHECK(bgt::parse_rat(" 2/4 ") == Rat(1, 2));
    CHECK(bgt::parse_rat("-0.5") == Rat(-1, 2));
    CHECK(bgt::parse_rat("1.") == Rat(1));
    CHECK(bgt::parse_rat(".25") == Rat(1, 4));
}

TEST_CASE("rational parsing: malformed input throws") {
    CHECK_THROWS_AS(bgt::parse_rat(""), bgt::RatParseError);
    CHECK_THROWS_AS(bgt::parse_rat("abc"), bgt::RatParseError);
    CHECK_THROWS_AS(bgt::parse_rat("1/0"), bgt::RatParseError);
    CHECK_THROWS_AS(bgt::parse_rat("1/2/3"), bgt::RatParseError);
    CHECK_THROWS_AS(bgt::parse_rat("1.2.3"), bgt::RatParseError);
}

TEST_CASE("rational formatting round-trips") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Rat r(static_cast<long>(rng() % 1000) + 1, static_cast<long>(rng() % 999) + 1);
        CHECK(bgt::parse_rat(bgt::to_frac_string(r)) == r);
    }
    CHECK(bgt::to_frac_string(Rat(1, 2)) == "1/2");
    CHECK(bgt::to_frac_string(Rat(3)) == "3");
    CHECK(bgt::to_decimal_string(Rat(1, 3), 4) == "0.3333");
}

TEST_CASE("decimal parsing is exact, not float-mediated") {
    // 0.1 must be 1/10 exactly; a double round-trip would not satisfy this.
    Rat r = bgt::parse_rat("0.1");
    CHECK(r * 10 == 1);
    CHECK(bgt::parse_rat("0.000001") == Rat(1, 1000000));
}

TEST_CASE("instance parsing: separators and comments") {
    auto inst = bgt::parse_instance("# garden\n1, 0.5\n1/4 0.25\n");
    REQUIRE(inst.n() == 4);
    CHECK(inst.growths[0] == 1);
    CHECK(inst.growths[1] == Rat(1, 2));
    CHECK(inst.growths[2] == Rat(1, 4));
    CHECK(inst.growths[3] == Rat(1, 4));
}

TEST_CASE("instance parsing: growths sorted non-increasing with id map") {
    auto inst = bgt::parse_instance("0.25, 1, 0.5");
    CHECK(inst.growths == std::vector<Rat>{1, Rat(1, 2), Rat(1, 4)});
    CHECK(inst.original_id == std::vector<int>{1, 2, 0});
}

TEST_CASE("instance parsing: error cases") {
    CHECK_THROWS_AS(bgt::parse_instance(""), bgt::EmptyInstanceError);
    CHECK_THROWS_AS(bgt::parse_instance("# only a comment\n"), bgt::EmptyInstanceError);
    CHECK_THROWS_AS(bgt::parse_instance("1, 0"), bgt::NonPositiveGrowthError);
    CHECK_THROWS_AS(bgt::parse_instance("1, -2"), bgt::NonPositiveGrowthError);
    CHECK_THROWS_AS(bgt::parse_instance("1, zork"), bgt::TokenError);
}

TEST_CASE("serialize then parse is identity") {
    auto inst = bgt::parse_instance("1, 0.83, 5/6, 0.05");
    auto back = bgt::parse_instance(bgt::serialize_instance(inst));
    CHECK(back.growths == inst.growths);
}

TEST_CASE("normalize divides by the fastest growth and records the scale") {
    auto inst = bgt::parse_instance("3, 1, 1/2");
    auto [norm, scale] = bgt::normalize(inst);
    CHECK(scale == 3);
    CHECK(norm.growths == std::vector<Rat>{1, Rat(1, 3), Rat(1, 6)});
    CHECK(norm.normalized());
}

TEST_CASE("lower bound: single bamboo is its own growth") {
    CHECK(bgt::lower_bound(bgt::parse_instance("5/7")) == Rat(5, 7));
}

TEST_CASE("lower bound: max of twice the fastest and the total") {
    // 2 h(1) dominates
    CHECK(bgt::lower_bound(bgt::parse_instance("1, 0.25")) == 2);
    // sum dominates
    CHECK(bgt::lower_bound(bgt::parse_instance("1, 1, 1")) == 3);
    // worked 16-bamboo example: sum 5.93 beats 2 h(1) = 2
    auto inst = bgt::parse_instance(
        "1, 0.83, 0.6, 0.55, 0.45, 0.4, 0.32, 0.29, 0.28, 0.27, 0.26, 0.22, 0.16, 0.15, 0.1, 0.05");
    CHECK(bgt::lower_bound(inst) == Rat(593, 100));
}

TEST_CASE("lower bound scales linearly") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        std::vector<Rat> g;
        for (int i = 0; i < n; ++i)
            g.emplace_back(static_cast<long>(rng() % 20) + 1, static_cast<long>(rng() % 20) + 1);
        auto inst = bgt::make_instance(g);
        Rat c(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 9) + 1);
        std::vector<Rat> scaled;
        for (const auto& h : g) scaled.push_back(h * c);
        CHECK(bgt::lower_bound(bgt::make_instance(scaled)) == c * bgt::lower_bound(inst));
    }
}
