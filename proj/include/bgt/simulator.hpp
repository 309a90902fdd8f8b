#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bgt/cycles.hpp"
#include "bgt/instance.hpp"

namespace bgt {

struct SimulationReport {
    long horizon = 0;
    Rat elevation;
    std::vector<Rat> per_bamboo_max;
    std::optional<long> period_detected;
};

// day (0-based) -> bamboo to cut that day
using CutPolicy = std::function<int(long)>;

// Discrete-day run: every bamboo grows h(j), heights are recorded after
// growth, then the policy's bamboo is cut to zero. Initial heights zero.
SimulationReport simulate(const BGTInstance& inst, const CutPolicy& policy, long horizon);

// Convenience wrapper; records the schedule's period in the report.
SimulationReport simulate_schedule(const BGTInstance& inst, const PeriodicSchedule& sched,
                                   long horizon);

// Index of a maximum-height bamboo (ties -> smallest index).
int reduce_max_policy(const std::vector<Rat>& heights);

// Default ReduceMax horizon: max(10^4, 20 n ceil(1/h(n))).
long default_reduce_max_horizon(const BGTInstance& inst);

// Online ReduceMax run (cut a tallest bamboo every day).
SimulationReport simulate_reduce_max(const BGTInstance& inst, long horizon);

// Per-day trace rows (day, cut id, max height) as CSV.
std::string trace_csv(const BGTInstance& inst, const CutPolicy& policy, long horizon);

std::string report_to_json(const SimulationReport& rep);

}  // namespace bgt
