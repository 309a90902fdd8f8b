#include "bgt/pw_enhanced.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "bgt/cycles.hpp"

namespace bgt {

namespace {

const Rat kTwoThirds(2, 3);
const Rat kHalf(1, 2);

}  // namespace

ClassifiedBamboo classify(const Rat& h) {
    if (h <= 0 || h > 1) throw std::domain_error("classify: growth outside (0,1]");
    ClassifiedBamboo c;
    if (h > kTwoThirds) {
        c.subset = Subset::S1;
        c.h_dd_a = c.h_dd_b = 1;
        c.deadline_a = c.deadline_b = 1;
        return c;
    }
    if (h > kHalf) {
        c.subset = Subset::S2;
        c.h_dd_a = 1;
        c.deadline_a = 1;
        c.h_dd_b = kHalf;
        c.deadline_b = 2;
        return c;
    }
    // h <= 1/2: locate k >= 1 with 1/2^(k+1) < h <= 1/2^k
    int k = 1;
    Rat p(1, 2);  // 1/2^k
    while (h <= p / 2) {
        p /= 2;
        ++k;
    }
    c.k = k;
    if (h > kTwoThirds * p) {
        c.subset = Subset::S3;
        c.h_dd_a = c.h_dd_b = p;
        c.deadline_a = c.deadline_b = (1L << k);
    } else {
        c.subset = Subset::S4;
        c.h_dd_a = c.h_dd_b = kTwoThirds * p;
        c.deadline_a = c.deadline_b = 3L * (1L << (k - 1));
    }
    return c;
}

PackingResult pack_structured(std::vector<ClassifiedBamboo> items) {
    for (const auto& it : items)
        if (it.subset != Subset::S3 && it.subset != Subset::S4)
            throw std::invalid_argument("pack_structured: items must be S3 or S4");

    std::stable_sort(items.begin(), items.end(), [](const ClassifiedBamboo& a, const ClassifiedBamboo& b) {
        if (a.h_dd_a != b.h_dd_a) return a.h_dd_a > b.h_dd_a;
        return a.bamboo < b.bamboo;
    });

    PackingResult res;
    Rat total = 0;
    std::vector<ClassifiedBamboo> bin;
    Rat fill = 0;
    for (auto& it : items) {
        total += it.h_dd_a;
        assert(fill + it.h_dd_a <= 1);  // items are multiples of the current one
        fill += it.h_dd_a;
        bin.push_back(std::move(it));
        if (fill == 1) {
            res.full_bins.push_back(std::move(bin));
            bin.clear();
            fill = 0;
        }
    }
    res.remainder = std::move(bin);
    res.pi = static_cast<long>(res.full_bins.size());
    assert(res.pi == static_cast<long>(floor_rat(total)));
    return res;
}

RemainderPacking pack_remainders(std::vector<RemainderItem> rem) {
    std::stable_sort(rem.begin(), rem.end(), [](const RemainderItem& a, const RemainderItem& b) {
        if (a.h_mod != b.h_mod) return a.h_mod > b.h_mod;
        return a.bamboo < b.bamboo;
    });
    RemainderPacking res;
    Rat total = 0;
    std::vector<Rat> fills;
    for (auto& it : rem) {
        total += it.h_mod;
        bool placed = false;
        for (size_t b = 0; b < res.bins.size(); ++b) {
            if (fills[b] + it.h_mod <= 1) {
                fills[b] += it.h_mod;
                res.bins[b].push_back(it);
                placed = true;
                break;
            }
        }
        if (!placed) {
            fills.push_back(it.h_mod);
            res.bins.push_back({it});
        }
    }
    res.formula_bins = static_cast<long>(ceil_rat(total));
    res.exceeded_formula = static_cast<long>(res.bins.size()) > res.formula_bins;
    return res;
}

namespace {

struct Classification {
    std::vector<ClassifiedBamboo> all;
    std::vector<int> s1, s2;  // bamboo indices, non-increasing growth
    std::vector<ClassifiedBamboo> s3, s4;
};

Classification classify_instance(const BGTInstance& inst) {
    Classification cl;
    for (int j = 0; j < inst.n(); ++j) {
        ClassifiedBamboo c = classify(inst.h(j));
        c.bamboo = j;
        switch (c.subset) {
            case Subset::S1: cl.s1.push_back(j); break;
            case Subset::S2: cl.s2.push_back(j); break;
            case Subset::S3: cl.s3.push_back(c); break;
            case Subset::S4: cl.s4.push_back(c); break;
        }
        cl.all.push_back(std::move(c));
    }
    return cl;
}

PlanPartition to_partition(const std::vector<ClassifiedBamboo>& bin, bool option_a, const char* label) {
    PlanPartition p;
    p.label = label;
    for (const auto& c : bin)
        p.members.push_back({c.bamboo, option_a ? c.h_dd_a : c.h_dd_b,
                             option_a ? c.deadline_a : c.deadline_b});
    return p;
}

// Appends the remainder bins, splitting any bin the cycle builders cannot
// schedule (the smallest item moves to a fresh bin until the rest works).
bool bins_schedulable(const std::vector<std::vector<RemainderItem>>& bins) {
    for (const auto& bin : bins) {
        std::vector<PlanMember> ms;
        for (const auto& it : bin) ms.push_back({it.bamboo, it.h_mod, it.deadline});
        try {
            build_cycle(ms);
        } catch (const UnschedulableBinError&) {
            return false;
        }
    }
    return true;
}

void append_remainder_bins(TrimPlan& plan, RemainderPacking packing,
                           const std::vector<RemainderItem>& pool) {
    plan.remainder_bins_formula = static_cast<int>(packing.formula_bins);
    plan.remainder_splits = 0;
    std::vector<std::vector<RemainderItem>> final_bins = std::move(packing.bins);
    if (!bins_schedulable(final_bins)) {
        // deadlines mix badly (e.g. {2,3,...}); regroup by source subset.
        // Each group alone is one schedulable bin: the pairing leftover is a
        // singleton, the dyadic group interleaves, the three-slot group has
        // deadlines 3*2^m, and each group's h'' sum is below 1.
        plan.remainder_splits = 1;
        final_bins.assign(3, {});
        for (const auto& it : pool) {
            size_t g = it.source == Subset::S2 ? 0 : it.source == Subset::S3 ? 1 : 2;
            final_bins[g].push_back(it);
        }
        std::erase_if(final_bins, [](const auto& b) { return b.empty(); });
        for (auto& bin : final_bins)
            std::sort(bin.begin(), bin.end(), [](const RemainderItem& a, const RemainderItem& b) {
                if (a.h_mod != b.h_mod) return a.h_mod > b.h_mod;
                return a.bamboo < b.bamboo;
            });
    }
    // deterministic order: bins by largest member h'', then id
    std::sort(final_bins.begin(), final_bins.end(),
              [](const std::vector<RemainderItem>& a, const std::vector<RemainderItem>& b) {
                  if (a.front().h_mod != b.front().h_mod) return a.front().h_mod > b.front().h_mod;
                  return a.front().bamboo < b.front().bamboo;
              });
    for (const auto& bin : final_bins) {
        PlanPartition p;
        p.label = "R";
        for (const auto& it : bin) p.members.push_back({it.bamboo, it.h_mod, it.deadline});
        plan.partitions.push_back(std::move(p));
    }
    plan.remainder_bins = static_cast<int>(final_bins.size());
}

TrimPlan assemble(const BGTInstance& inst, const Classification& cl, bool option_a) {
    TrimPlan plan;
    plan.option = option_a ? PlanOption::A : PlanOption::B;

    for (int j : cl.s1) {
        PlanPartition p;
        p.label = "S1";
        p.members.push_back({j, Rat(1), 1});
        plan.partitions.push_back(std::move(p));
    }

    std::vector<RemainderItem> pool;
    if (option_a) {
        for (int j : cl.s2) {
            PlanPartition p;
            p.label = "S2";
            p.members.push_back({j, Rat(1), 1});
            plan.partitions.push_back(std::move(p));
        }
    } else {
        // pairs in non-increasing growth order; odd leftover -> R_{S2}
        size_t i = 0;
        for (; i + 1 < cl.s2.size(); i += 2) {
            PlanPartition p;
            p.label = "S2";
            p.members.push_back({cl.s2[i], kHalf, 2});
            p.members.push_back({cl.s2[i + 1], kHalf, 2});
            plan.partitions.push_back(std::move(p));
        }
        if (i < cl.s2.size()) pool.push_back({cl.s2[i], kHalf, 2, Subset::S2});
    }

    PackingResult p3 = pack_structured(cl.s3);
    PackingResult p4 = pack_structured(cl.s4);
    for (const auto& bin : p3.full_bins) plan.partitions.push_back(to_partition(bin, option_a, "S3"));

    for (const auto& c : p3.remainder)
        pool.push_back({c.bamboo, c.h_dd_a, c.deadline_a, Subset::S3});
    for (const auto& c : p4.remainder)
        pool.push_back({c.bamboo, c.h_dd_a, c.deadline_a, Subset::S4});
    append_remainder_bins(plan, pack_remainders(pool), pool);

    for (const auto& bin : p4.full_bins) plan.partitions.push_back(to_partition(bin, option_a, "S4"));

    if (option_a) {
        plan.z = Rat(plan.alpha()) * inst.h(0);
    } else {
        int j_star = cl.s2.front();
        plan.j_star = j_star;
        plan.z = Rat(2) * inst.h(j_star) * Rat(plan.alpha());
    }
    return plan;
}

}  // namespace

TrimPlan plan_option_a(const BGTInstance& inst) {
    if (!inst.normalized()) throw std::invalid_argument("plan_option_a: instance must be normalized");
    return assemble(inst, classify_instance(inst), true);
}

std::optional<TrimPlan> plan_option_b(const BGTInstance& inst) {
    if (!inst.normalized()) throw std::invalid_argument("plan_option_b: instance must be normalized");
    Classification cl = classify_instance(inst);
    if (cl.s2.empty()) return std::nullopt;
    return assemble(inst, cl, false);
}

TrimPlan run_pw2(const BGTInstance& inst) {
    TrimPlan a = plan_option_a(inst);
    std::optional<TrimPlan> b = plan_option_b(inst);
    if (b && b->z < a.z) return std::move(*b);
    return a;
}

}  // namespace bgt
