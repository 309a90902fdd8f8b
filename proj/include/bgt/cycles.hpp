#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bgt/plan.hpp"

namespace bgt {

struct CycleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// sum of 1/deadline over a bin exceeds 1
struct CapacityError : CycleError {
    CapacityError() : CycleError("cycle capacity exceeded: sum 1/deadline > 1") {}
};
// the deadline-greedy rule found no valid cycle for this bin
struct UnschedulableBinError : CycleError {
    UnschedulableBinError() : CycleError("no valid member cycle found; bin must be split") {}
};

// Cycle for members whose deadlines are all powers of two. Length divides
// the max deadline; under-full bins repeat the largest-h_mod member.
std::vector<int> build_cycle_dyadic(const std::vector<PlanMember>& members);

// Cycle for deadlines of the form 3*2^m: three base slots cycled mod 3,
// each slot subdivided dyadically.
std::vector<int> build_cycle_triadic(const std::vector<PlanMember>& members);

// Deadline-greedy cycle for arbitrary integer deadlines. Simulates
// appearances, cutting the member with the largest (age+1)*h_mod, until the
// age state repeats; the extracted cycle is verified against every
// deadline. Throws UnschedulableBinError when verification fails.
std::vector<int> build_cycle_mixed(const std::vector<PlanMember>& members);

// Builder dispatch for one partition (dyadic / triadic / mixed).
std::vector<int> build_cycle(const std::vector<PlanMember>& members);

// Largest cyclic gap (in appearances) of `id` within `cycle`; returns 0 if
// the id never appears.
long max_cyclic_gap(const std::vector<int>& cycle, int id);

// Executable perpetual schedule: partitions round-robin in the outer loop,
// each partition runs its own finite member cycle.
struct PeriodicSchedule {
    int alpha = 0;
    std::vector<std::vector<int>> partition_cycles;
    long period = 0;  // alpha * lcm of cycle lengths

    // day t (0-based) -> bamboo to cut
    int cut_on_day(long t) const {
        int p = static_cast<int>(t % alpha);
        const auto& c = partition_cycles[static_cast<size_t>(p)];
        return c[static_cast<size_t>((t / alpha) % static_cast<long>(c.size()))];
    }
};

PeriodicSchedule build_schedule(const TrimPlan& plan);

struct GapEntry {
    int bamboo;
    long gap_appearances;   // max cyclic gap within its partition cycle
    long gap_days;          // gap_appearances * alpha
    Rat implied_height;     // gap_days * h(bamboo)
    long deadline;
    bool ok;                // gap <= deadline and implied height <= plan z
};

struct VerificationReport {
    bool pass = true;
    Rat max_implied_height{0};
    std::vector<GapEntry> entries;
};

// Exhaustive cyclic-gap check of a schedule against its plan: every bamboo
// covered exactly once, every gap within its deadline, every implied height
// within plan.z.
VerificationReport verify_schedule(const BGTInstance& inst, const TrimPlan& plan,
                                   const PeriodicSchedule& sched);

// Text table of the first `days` days (day, partition, bamboo), mirroring
// the row-per-round layout used in schedule listings.
std::string dump_schedule(const PeriodicSchedule& sched, long days);

}  // namespace bgt
