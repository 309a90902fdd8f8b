#include "bgt/cycles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace bgt {

namespace {

bool is_pow2(long v) { return v > 0 && (v & (v - 1)) == 0; }
bool is_triadic(long v) { return v % 3 == 0 && is_pow2(v / 3); }

void check_capacity(const std::vector<PlanMember>& members) {
    Rat load = 0;
    for (const auto& m : members) load += Rat(1, m.deadline);
    if (load > 1) throw CapacityError();
}

struct Item {
    int id;
    long deadline;
};

// Interleaves two sub-cycles into one of length 2*lcm(|a|,|b|).
std::vector<int> interleave2(const std::vector<int>& a, const std::vector<int>& b) {
    long l = std::lcm(static_cast<long>(a.size()), static_cast<long>(b.size()));
    std::vector<int> out;
    out.reserve(static_cast<size_t>(2 * l));
    for (long i = 0; i < l; ++i) {
        out.push_back(a[static_cast<size_t>(i % static_cast<long>(a.size()))]);
        out.push_back(b[static_cast<size_t>(i % static_cast<long>(b.size()))]);
    }
    return out;
}

// Recursive binary subdivision over power-of-two deadlines. Splitting the
// slot sequence in two halves each member's deadline; greedy assignment to
// the lighter half keeps both halves within capacity whenever the total
// density is <= 1 (loads stay multiples of the current dyadic density).
std::vector<int> build_dyadic_rec(std::vector<Item> items, int pad_id) {
    if (items.empty()) return {pad_id};
    if (items.size() == 1) return {items.front().id};

    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        if (a.deadline != b.deadline) return a.deadline < b.deadline;
        return a.id < b.id;
    });
    std::vector<Item> g0, g1;
    Rat load0 = 0, load1 = 0;
    for (const auto& it : items) {
        if (it.deadline < 2) throw CapacityError();  // deadline 1 among others
        Rat d(1, it.deadline / 2);
        if (load1 < load0) {
            g1.push_back({it.id, it.deadline / 2});
            load1 += d;
        } else {
            g0.push_back({it.id, it.deadline / 2});
            load0 += d;
        }
    }
    return interleave2(build_dyadic_rec(std::move(g0), pad_id),
                       build_dyadic_rec(std::move(g1), pad_id));
}

std::vector<Item> to_items(const std::vector<PlanMember>& members) {
    std::vector<Item> items;
    items.reserve(members.size());
    for (const auto& m : members) items.push_back({m.bamboo, m.deadline});
    return items;
}

int largest_mod_member(const std::vector<PlanMember>& members) {
    const PlanMember* best = &members.front();
    for (const auto& m : members)
        if (m.h_mod > best->h_mod || (m.h_mod == best->h_mod && m.bamboo < best->bamboo)) best = &m;
    return best->bamboo;
}

}  // namespace

std::vector<int> build_cycle_dyadic(const std::vector<PlanMember>& members) {
    check_capacity(members);
    for (const auto& m : members)
        if (!is_pow2(m.deadline)) throw CycleError("dyadic builder: deadline not a power of two");
    return build_dyadic_rec(to_items(members), largest_mod_member(members));
}

std::vector<int> build_cycle_triadic(const std::vector<PlanMember>& members) {
    check_capacity(members);
    for (const auto& m : members)
        if (!is_triadic(m.deadline)) throw CycleError("triadic builder: deadline not of form 3*2^m");

    // three base slots mod 3; member with deadline 3*2^m has dyadic
    // deadline 2^m inside its slot
    std::vector<PlanMember> sorted = members;
    std::stable_sort(sorted.begin(), sorted.end(), [](const PlanMember& a, const PlanMember& b) {
        if (a.h_mod != b.h_mod) return a.h_mod > b.h_mod;
        return a.bamboo < b.bamboo;
    });
    std::vector<Item> slot[3];
    Rat load[3] = {0, 0, 0};
    for (const auto& m : sorted) {
        int best = 0;
        for (int s = 1; s < 3; ++s)
            if (load[s] < load[best]) best = s;
        long dy = m.deadline / 3;
        if (load[best] + Rat(1, dy) > 1) throw CapacityError();
        slot[best].push_back({m.bamboo, dy});
        load[best] += Rat(1, dy);
    }

    int pad = largest_mod_member(members);
    std::vector<int> cy[3];
    for (int s = 0; s < 3; ++s) cy[s] = build_dyadic_rec(std::move(slot[s]), pad);
    long l = std::lcm(std::lcm(static_cast<long>(cy[0].size()), static_cast<long>(cy[1].size())),
                      static_cast<long>(cy[2].size()));
    std::vector<int> out;
    out.reserve(static_cast<size_t>(3 * l));
    for (long i = 0; i < l; ++i)
        for (int s = 0; s < 3; ++s)
            out.push_back(cy[s][static_cast<size_t>(i % static_cast<long>(cy[s].size()))]);
    return out;
}

std::vector<int> build_cycle_mixed(const std::vector<PlanMember>& members) {
    check_capacity(members);
    if (members.size() == 1) return {members.front().bamboo};

    const size_t n = members.size();
    long step_cap = 1;
    for (const auto& m : members) {
        step_cap *= m.deadline;
        if (step_cap > (1L << 22)) {
            step_cap = 1L << 22;
            break;
        }
    }

    // cut the member with the largest pending (age+1)*h_mod; ties prefer
    // larger age, then smaller id
    std::vector<long> ages(n, 0);
    std::map<std::vector<long>, long> seen;
    std::vector<int> cuts;
    long cycle_start = -1;
    for (long step = 0; step <= step_cap; ++step) {
        auto it = seen.find(ages);
        if (it != seen.end()) {
            cycle_start = it->second;
            break;
        }
        seen.emplace(ages, step);
        size_t pick = 0;
        Rat best = -1;
        for (size_t i = 0; i < n; ++i) {
            Rat score = Rat(ages[i] + 1) * members[i].h_mod;
            bool better = score > best ||
                          (score == best && (ages[i] > ages[pick] ||
                                             (ages[i] == ages[pick] && members[i].bamboo < members[pick].bamboo)));
            if (better) {
                best = score;
                pick = i;
            }
        }
        cuts.push_back(static_cast<int>(pick));
        for (size_t i = 0; i < n; ++i) ages[i] = i == pick ? 0 : ages[i] + 1;
    }
    if (cycle_start < 0) throw UnschedulableBinError();

    std::vector<int> cycle(cuts.begin() + cycle_start, cuts.end());
    // verify every member appears and meets its deadline cyclically
    const long len = static_cast<long>(cycle.size());
    for (size_t i = 0; i < n; ++i) {
        long last = -1, first = -1, maxgap = 0;
        for (long t = 0; t < len; ++t) {
            if (cycle[static_cast<size_t>(t)] != static_cast<int>(i)) continue;
            if (first < 0)
                first = t;
            else
                maxgap = std::max(maxgap, t - last);
            last = t;
        }
        if (first < 0) throw UnschedulableBinError();
        maxgap = std::max(maxgap, first + len - last);
        if (maxgap > members[i].deadline) throw UnschedulableBinError();
    }
    std::vector<int> out;
    out.reserve(cycle.size());
    for (int idx : cycle) out.push_back(members[static_cast<size_t>(idx)].bamboo);
    return out;
}

std::vector<int> build_cycle(const std::vector<PlanMember>& members) {
    bool all_pow2 = true, all_tri = true;
    for (const auto& m : members) {
        all_pow2 = all_pow2 && is_pow2(m.deadline);
        all_tri = all_tri && is_triadic(m.deadline);
    }
    if (all_pow2) return build_cycle_dyadic(members);
    if (all_tri) return build_cycle_triadic(members);
    return build_cycle_mixed(members);
}

long max_cyclic_gap(const std::vector<int>& cycle, int id) {
    const long len = static_cast<long>(cycle.size());
    long last = -1, first = -1, maxgap = 0;
    for (long t = 0; t < len; ++t) {
        if (cycle[static_cast<size_t>(t)] != id) continue;
        if (first < 0)
            first = t;
        else
            maxgap = std::max(maxgap, t - last);
        last = t;
    }
    if (first < 0) return 0;
    return std::max(maxgap, first + len - last);
}

PeriodicSchedule build_schedule(const TrimPlan& plan) {
    PeriodicSchedule sched;
    sched.alpha = plan.alpha();
    long l = 1;
    for (const auto& p : plan.partitions) {
        sched.partition_cycles.push_back(build_cycle(p.members));
        l = std::lcm(l, static_cast<long>(sched.partition_cycles.back().size()));
        if (l > (1L << 40)) throw CycleError("schedule period too large");
    }
    sched.period = l * sched.alpha;
    return sched;
}

VerificationReport verify_schedule(const BGTInstance& inst, const TrimPlan& plan,
                                   const PeriodicSchedule& sched) {
    VerificationReport rep;
    std::vector<int> covered(static_cast<size_t>(inst.n()), 0);
    for (size_t p = 0; p < plan.partitions.size(); ++p) {
        const auto& cycle = sched.partition_cycles[p];
        for (const auto& m : plan.partitions[p].members) {
            GapEntry e;
            e.bamboo = m.bamboo;
            e.deadline = m.deadline;
            e.gap_appearances = max_cyclic_gap(cycle, m.bamboo);
            e.gap_days = e.gap_appearances * sched.alpha;
            e.implied_height = Rat(e.gap_days) * inst.h(m.bamboo);
            e.ok = e.gap_appearances > 0 && e.gap_appearances <= e.deadline &&
                   e.implied_height <= plan.z;
            rep.pass = rep.pass && e.ok;
            rep.max_implied_height = std::max(rep.max_implied_height, e.implied_height);
            covered[static_cast<size_t>(m.bamboo)]++;
            rep.entries.push_back(std::move(e));
        }
    }
    for (int c : covered)
        if (c != 1) rep.pass = false;
    return rep;
}

std::string dump_schedule(const PeriodicSchedule& sched, long days) {
    std::ostringstream out;
    for (long t = 0; t < days; ++t) {
        int p = static_cast<int>(t % sched.alpha);
        if (p == 0 && t > 0) out << '\n';
        if (p > 0) out << ' ';
        out << 'P' << p + 1 << ":[b" << sched.cut_on_day(t) + 1 << ']';
    }
    out << '\n';
    return out.str();
}

}  // namespace bgt
