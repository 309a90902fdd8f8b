#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "bgt/instance.hpp"

namespace bgt {

struct OracleLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleConfig {
    int max_n = 4;
    long max_states = 5'000'000;
};

// Witness of feasibility: cut ids for a prefix walk plus the repeating
// cycle it enters. Simulating prefix+cycles forever keeps every height <= H.
struct WitnessCycle {
    std::vector<int> prefix;
    std::vector<int> cycle;
};

// Decision form of the objective: does a perpetual one-cut-per-day
// schedule exist keeping every post-growth height <= H? Encoded on the
// cut-age graph with caps floor(H/h(j)): a state graph cycle reachable
// from the all-ones start state is exactly a perpetual schedule.
bool feasible(const BGTInstance& inst, const Rat& H, const OracleConfig& cfg = {});

// Same decision, with a concrete schedule extracted on success.
std::optional<WitnessCycle> feasible_witness(const BGTInstance& inst, const Rat& H,
                                             const OracleConfig& cfg = {});

// Exact optimal elevation H* for tiny instances: the optimum equals
// d * h(j) for some integer d (heights are age * growth), so a binary
// search over that candidate list, bounded by LB and the PW'' value,
// finds it with feasible().
Rat exact_optimum(const BGTInstance& inst, const OracleConfig& cfg = {});

}  // namespace bgt
