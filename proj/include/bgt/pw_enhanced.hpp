#pragma once

#include <optional>
#include <vector>

#include "bgt/plan.hpp"

namespace bgt {

enum class Subset { S1, S2, S3, S4 };

// One bamboo's class under the four-way growth split, with the modified
// growths and deadlines used by options (a) and (b).
//   S1: 2/3 < h <= 1            -> h'' = 1
//   S2: 1/2 < h <= 2/3          -> h''_a = 1, h''_b = 1/2
//   S3: (2/3)/2^k < h <= 1/2^k  -> h'' = 1/2^k        (k >= 1)
//   S4: 1/2^(k+1) < h <= (2/3)/2^k -> h'' = (2/3)/2^k (k >= 1)
struct ClassifiedBamboo {
    int bamboo = -1;
    Subset subset = Subset::S1;
    int k = 0;  // exponent; 0 for S1/S2
    Rat h_dd_a;
    Rat h_dd_b;
    long deadline_a = 1;
    long deadline_b = 1;
};

ClassifiedBamboo classify(const Rat& h);

// Full unit bins plus the leftover R-set of one subset's items.
struct PackingResult {
    std::vector<std::vector<ClassifiedBamboo>> full_bins;
    std::vector<ClassifiedBamboo> remainder;
    long pi = 0;  // = floor of the subset's h'' sum
};

// Greedy non-increasing fill of same-subset items (S3 or S4); every full
// bin sums to exactly 1 in h''.
PackingResult pack_structured(std::vector<ClassifiedBamboo> items);

struct RemainderItem {
    int bamboo;
    Rat h_mod;
    long deadline;
    Subset source;
};

struct RemainderPacking {
    std::vector<std::vector<RemainderItem>> bins;
    long formula_bins = 0;  // ceil of the pooled h'' sum
    bool exceeded_formula = false;
};

// First-fit-decreasing over the pooled R_{S2} u R_{S3} u R_{S4} items,
// capacity 1. The per-group fallback (one bin per source subset, <= 3
// bins) bounds the count; z is computed from the bins actually used.
RemainderPacking pack_remainders(std::vector<RemainderItem> rem);

// Option (a): S1 and S2 as singleton partitions, S3/S4 full bins, then
// remainder bins; z(a) = partition count * h(1).
TrimPlan plan_option_a(const BGTInstance& inst);

// Option (b): S2 bamboos paired two per partition with h'' = 1/2; an odd
// leftover joins the remainder pool. z(b) = 2 h(j*) * alpha. Absent when
// S2 is empty.
std::optional<TrimPlan> plan_option_b(const BGTInstance& inst);

// min{z(a), z(b)}; ties favour option (a).
TrimPlan run_pw2(const BGTInstance& inst);

}  // namespace bgt
