#include "bgt/oracle.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "bgt/bounds.hpp"
#include "bgt/pw_enhanced.hpp"

namespace bgt {

namespace {

// Cut-age state space under caps c_j: ages run 1..c_j, encoded mixed-radix.
struct StateSpace {
    std::vector<long> caps;
    std::vector<long> strides;
    long total = 1;

    explicit StateSpace(std::vector<long> c) : caps(std::move(c)) {
        strides.resize(caps.size());
        for (size_t j = 0; j < caps.size(); ++j) {
            strides[j] = total;
            total *= caps[j];
        }
    }

    long encode(const std::vector<long>& ages) const {
        long idx = 0;
        for (size_t j = 0; j < caps.size(); ++j) idx += (ages[j] - 1) * strides[j];
        return idx;
    }

    void decode(long idx, std::vector<long>& ages) const {
        for (size_t j = 0; j < caps.size(); ++j) {
            ages[j] = idx / strides[j] % caps[j] + 1;
        }
    }
};

// Survivor set of the age graph: iteratively delete states with no
// outgoing edge (greatest fixed point). What remains is exactly the set
// of states admitting infinite play.
struct SurvivorGraph {
    StateSpace space;
    std::vector<int> outdeg;
    std::vector<char> alive;

    explicit SurvivorGraph(std::vector<long> caps) : space(std::move(caps)) {
        const size_t n = space.caps.size();
        outdeg.assign(static_cast<size_t>(space.total), 0);
        alive.assign(static_cast<size_t>(space.total), 1);

        std::vector<long> ages(n);
        std::deque<long> dead;
        for (long idx = 0; idx < space.total; ++idx) {
            space.decode(idx, ages);
            int at_cap = 0;
            for (size_t j = 0; j < n; ++j)
                if (ages[j] == space.caps[j]) ++at_cap;
            // cutting j advances everyone else; any other bamboo at its cap blocks
            int deg = at_cap >= 2 ? 0 : (at_cap == 1 ? 1 : static_cast<int>(n));
            outdeg[static_cast<size_t>(idx)] = deg;
            if (deg == 0) {
                alive[static_cast<size_t>(idx)] = 0;
                dead.push_back(idx);
            }
        }

        std::vector<long> s(n);
        while (!dead.empty()) {
            long idx = dead.front();
            dead.pop_front();
            space.decode(idx, s);
            // predecessors: cut i requires s_i == 1 and s_j >= 2 elsewhere
            for (size_t i = 0; i < n; ++i) {
                if (s[i] != 1) continue;
                bool ok = true;
                for (size_t j = 0; j < n && ok; ++j)
                    if (j != i && s[j] < 2) ok = false;
                if (!ok) continue;
                long base = 0;
                for (size_t j = 0; j < n; ++j)
                    if (j != i) base += (s[j] - 2) * space.strides[j];
                for (long v = 1; v <= space.caps[i]; ++v) {
                    long t = base + (v - 1) * space.strides[i];
                    if (!alive[static_cast<size_t>(t)]) continue;
                    if (--outdeg[static_cast<size_t>(t)] == 0) {
                        alive[static_cast<size_t>(t)] = 0;
                        dead.push_back(t);
                    }
                }
            }
        }
    }

    // smallest valid cut from `ages` leading to a surviving state
    std::optional<int> pick_move(std::vector<long>& ages) const {
        const size_t n = space.caps.size();
        for (size_t i = 0; i < n; ++i) {
            bool ok = true;
            for (size_t j = 0; j < n && ok; ++j)
                if (j != i && ages[j] + 1 > space.caps[j]) ok = false;
            if (!ok) continue;
            std::vector<long> next(n);
            for (size_t j = 0; j < n; ++j) next[j] = j == i ? 1 : ages[j] + 1;
            if (alive[static_cast<size_t>(space.encode(next))]) {
                ages = std::move(next);
                return static_cast<int>(i);
            }
        }
        return std::nullopt;
    }
};

std::vector<long> age_caps(const BGTInstance& inst, const Rat& H, const OracleConfig& cfg) {
    if (inst.n() > cfg.max_n)
        throw OracleLimitError("oracle: instance exceeds configured bamboo cap");
    std::vector<long> caps;
    caps.reserve(static_cast<size_t>(inst.n()));
    BigInt states = 1;
    for (const auto& g : inst.growths) {
        BigInt c = floor_rat(H / g);
        if (c < 1) return {};  // some bamboo cannot even survive day one
        states *= c;
        if (states > cfg.max_states)
            throw OracleLimitError("oracle: state space exceeds configured node limit");
        caps.push_back(static_cast<long>(c));
    }
    return caps;
}

}  // namespace

bool feasible(const BGTInstance& inst, const Rat& H, const OracleConfig& cfg) {
    std::vector<long> caps = age_caps(inst, H, cfg);
    if (caps.empty()) return false;
    SurvivorGraph g(std::move(caps));
    std::vector<long> start(static_cast<size_t>(inst.n()), 1);
    return g.alive[static_cast<size_t>(g.space.encode(start))] != 0;
}

std::optional<WitnessCycle> feasible_witness(const BGTInstance& inst, const Rat& H,
                                             const OracleConfig& cfg) {
    std::vector<long> caps = age_caps(inst, H, cfg);
    if (caps.empty()) return std::nullopt;
    SurvivorGraph g(std::move(caps));
    std::vector<long> ages(static_cast<size_t>(inst.n()), 1);
    if (!g.alive[static_cast<size_t>(g.space.encode(ages))]) return std::nullopt;

    // walk inside the survivor set until a state repeats
    std::unordered_map<long, size_t> seen;
    std::vector<int> cuts;
    for (;;) {
        long idx = g.space.encode(ages);
        auto it = seen.find(idx);
        if (it != seen.end()) {
            WitnessCycle w;
            w.prefix.assign(cuts.begin(), cuts.begin() + static_cast<long>(it->second));
            w.cycle.assign(cuts.begin() + static_cast<long>(it->second), cuts.end());
            return w;
        }
        seen.emplace(idx, cuts.size());
        auto mv = g.pick_move(ages);
        if (!mv) return std::nullopt;  // cannot happen on a surviving state
        cuts.push_back(*mv);
    }
}

Rat exact_optimum(const BGTInstance& inst, const OracleConfig& cfg) {
    if (inst.n() > cfg.max_n)
        throw OracleLimitError("oracle: instance exceeds configured bamboo cap");
    if (inst.n() == 1) return inst.h(0);

    // valid schedule exists at the PW'' value, so H* <= z
    auto [norm, scale] = normalize(inst);
    Rat z = run_pw2(norm).z * scale;
    Rat lb = lower_bound(inst);

    std::vector<Rat> candidates;
    for (int j = 0; j < inst.n(); ++j) {
        for (BigInt d = 1; Rat(d) * inst.h(j) <= z; ++d) {
            Rat c = Rat(d) * inst.h(j);
            if (c >= lb) candidates.push_back(std::move(c));
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    size_t lo = 0, hi = candidates.size() - 1;  // feasible(z) holds
    while (lo < hi) {
        size_t mid = lo + (hi - lo) / 2;
        if (feasible(inst, candidates[mid], cfg))
            hi = mid;
        else
            lo = mid + 1;
    }
    return candidates[lo];
}

}  // namespace bgt
