#include "bgt/pw_classic.hpp"

#include <cassert>
#include <stdexcept>

namespace bgt {

RoundedGrowth round_up_pow2(const Rat& h) {
    if (h <= 0 || h > 1) throw std::domain_error("round_up_pow2: growth outside (0,1]");
    RoundedGrowth rg;
    Rat p = 1;  // 1/2^k
    long r = 1;
    int k = 0;
    while (h <= p / 2) {
        p /= 2;
        r *= 2;
        ++k;
    }
    rg.h_prime = p;
    rg.deadline = r;
    rg.k = k;
    return rg;
}

TrimPlan build_plan_pw(const BGTInstance& inst) {
    if (!inst.normalized()) throw std::invalid_argument("build_plan_pw: instance must be normalized");

    TrimPlan plan;
    plan.option = PlanOption::PW;
    PlanPartition current;
    Rat fill = 0;
    // instance is sorted non-increasing, so the rounded values are too;
    // the running fill is always a multiple of the next item, hence the
    // bin either closes at exactly 1 or has room
    for (int j = 0; j < inst.n(); ++j) {
        RoundedGrowth rg = round_up_pow2(inst.h(j));
        assert(fill + rg.h_prime <= 1);
        current.members.push_back({j, rg.h_prime, rg.deadline});
        fill += rg.h_prime;
        if (fill == 1) {
            plan.partitions.push_back(std::move(current));
            current = {};
            fill = 0;
        }
    }
    if (!current.members.empty()) plan.partitions.push_back(std::move(current));
    plan.z = Rat(plan.alpha()) * inst.h(0);
    return plan;
}

}  // namespace bgt
