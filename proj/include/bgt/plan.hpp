#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bgt/instance.hpp"

namespace bgt {

enum class PlanOption { PW, A, B };

std::string to_string(PlanOption opt);

struct PlanMember {
    int bamboo;        // index into the (sorted) instance
    Rat h_mod;         // modified growth h' or h'' used when packing
    long deadline;     // max partition-appearances between cuts, = 1/h_mod
};

struct PlanPartition {
    std::vector<PlanMember> members;
    std::string label;  // provenance of the bin (S1, S2, S3, S4, R)
    Rat mod_sum() const {
        Rat s = 0;
        for (const auto& m : members) s += m.h_mod;
        return s;
    }
};

// A complete partitioning of the instance plus the elevation value it
// guarantees. One bamboo appears in exactly one partition.
struct TrimPlan {
    PlanOption option = PlanOption::PW;
    std::vector<PlanPartition> partitions;
    Rat z;                          // guaranteed elevation bound
    std::optional<int> j_star;      // largest-growth S2 member (option b)
    // remainder packing bookkeeping: bins actually used vs ceil formula
    int remainder_bins = 0;
    int remainder_bins_formula = 0;
    int remainder_splits = 0;       // bins split to restore schedulability

    int alpha() const { return static_cast<int>(partitions.size()); }
};

// JSON document: partitions with member ids, h'' values and deadlines,
// option tag, z as "num/den".
std::string plan_to_json(const TrimPlan& plan);

// Compact one-line-per-partition listing ("P1:[b1] P2:[b2,b3] ..."),
// 1-based ids in instance (sorted) order; used for golden-file checks.
std::string plan_partition_string(const TrimPlan& plan);

}  // namespace bgt
