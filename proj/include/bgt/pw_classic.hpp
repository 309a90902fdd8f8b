#pragma once

#include "bgt/plan.hpp"

namespace bgt {

// Growth rounded up to the nearest power-of-two fraction 1/2^k, with the
// matching deadline r = 2^k (partition-appearances between cuts).
struct RoundedGrowth {
    int bamboo = -1;
    Rat h_prime;
    long deadline = 0;
    int k = 0;
};

// Smallest 1/2^k >= h, for 0 < h <= 1.
RoundedGrowth round_up_pow2(const Rat& h);

// Baseline pinwheel plan: round every growth to 1/2^k, fill unit bins
// greedily in non-increasing order (dyadic items close every bin at
// exactly 1, except possibly the last), value z = alpha * h(1).
TrimPlan build_plan_pw(const BGTInstance& inst);

}  // namespace bgt
