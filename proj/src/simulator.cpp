#include "bgt/simulator.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bgt {

namespace {

struct GapTracker {
    std::vector<long> last_cut;
    std::vector<long> max_age;

    explicit GapTracker(int n) : last_cut(static_cast<size_t>(n), -1), max_age(static_cast<size_t>(n), 0) {}

    void cut(int j, long day) {
        max_age[static_cast<size_t>(j)] =
            std::max(max_age[static_cast<size_t>(j)], day - last_cut[static_cast<size_t>(j)]);
        last_cut[static_cast<size_t>(j)] = day;
    }

    void finish(long horizon) {
        for (size_t j = 0; j < last_cut.size(); ++j)
            max_age[j] = std::max(max_age[j], horizon - 1 - last_cut[j]);
    }
};

SimulationReport report_from_ages(const BGTInstance& inst, const GapTracker& gaps, long horizon) {
    SimulationReport rep;
    rep.horizon = horizon;
    rep.per_bamboo_max.reserve(static_cast<size_t>(inst.n()));
    rep.elevation = 0;
    for (int j = 0; j < inst.n(); ++j) {
        Rat m = Rat(gaps.max_age[static_cast<size_t>(j)]) * inst.h(j);
        rep.elevation = std::max(rep.elevation, m);
        rep.per_bamboo_max.push_back(std::move(m));
    }
    return rep;
}

}  // namespace

SimulationReport simulate(const BGTInstance& inst, const CutPolicy& policy, long horizon) {
    if (horizon < 1) throw std::invalid_argument("simulate: horizon must be >= 1");
    // height of bamboo j after growth on day t is (t - last_cut[j]) * h(j),
    // so only the cut days and the final ages matter
    GapTracker gaps(inst.n());
    for (long t = 0; t < horizon; ++t) {
        int id = policy(t);
        if (id < 0 || id >= inst.n()) throw std::out_of_range("simulate: policy returned invalid bamboo id");
        gaps.cut(id, t);
    }
    gaps.finish(horizon);
    return report_from_ages(inst, gaps, horizon);
}

SimulationReport simulate_schedule(const BGTInstance& inst, const PeriodicSchedule& sched,
                                   long horizon) {
    SimulationReport rep = simulate(inst, [&](long t) { return sched.cut_on_day(t); }, horizon);
    rep.period_detected = sched.period;
    return rep;
}

int reduce_max_policy(const std::vector<Rat>& heights) {
    int best = 0;
    for (int j = 1; j < static_cast<int>(heights.size()); ++j)
        if (heights[static_cast<size_t>(j)] > heights[static_cast<size_t>(best)]) best = j;
    return best;
}

long default_reduce_max_horizon(const BGTInstance& inst) {
    Rat inv = 1 / inst.growths.back();
    long c = static_cast<long>(ceil_rat(inv));
    return std::max(10000L, 20L * inst.n() * c);
}

SimulationReport simulate_reduce_max(const BGTInstance& inst, long horizon) {
    if (horizon < 1) throw std::invalid_argument("simulate_reduce_max: horizon must be >= 1");
    const int n = inst.n();

    // integer weights over the common denominator; int64 when it fits
    BigInt lcm = 1;
    for (const auto& g : inst.growths) lcm = boost::multiprecision::lcm(lcm, den(g));
    std::vector<BigInt> w_big;
    w_big.reserve(static_cast<size_t>(n));
    BigInt w_max = 0;
    for (const auto& g : inst.growths) {
        w_big.push_back(num(g) * (lcm / den(g)));
        w_max = std::max(w_max, w_big.back());
    }
    bool fits = w_max * (horizon + 1) < BigInt(std::numeric_limits<long long>::max());

    GapTracker gaps(n);
    if (fits) {
        std::vector<long long> w(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) w[static_cast<size_t>(j)] = static_cast<long long>(w_big[static_cast<size_t>(j)]);
        for (long t = 0; t < horizon; ++t) {
            int best = 0;
            long long best_h = (t - gaps.last_cut[0]) * w[0];
            for (int j = 1; j < n; ++j) {
                long long h = (t - gaps.last_cut[static_cast<size_t>(j)]) * w[static_cast<size_t>(j)];
                if (h > best_h) {
                    best_h = h;
                    best = j;
                }
            }
            gaps.cut(best, t);
        }
    } else {
        for (long t = 0; t < horizon; ++t) {
            int best = 0;
            BigInt best_h = BigInt(t - gaps.last_cut[0]) * w_big[0];
            for (int j = 1; j < n; ++j) {
                BigInt h = BigInt(t - gaps.last_cut[static_cast<size_t>(j)]) * w_big[static_cast<size_t>(j)];
                if (h > best_h) {
                    best_h = std::move(h);
                    best = j;
                }
            }
            gaps.cut(best, t);
        }
    }
    gaps.finish(horizon);
    return report_from_ages(inst, gaps, horizon);
}

std::string trace_csv(const BGTInstance& inst, const CutPolicy& policy, long horizon) {
    std::ostringstream out;
    out << "day,cut,max_height\n";
    std::vector<long> last(static_cast<size_t>(inst.n()), -1);
    for (long t = 0; t < horizon; ++t) {
        Rat mx = 0;
        for (int j = 0; j < inst.n(); ++j)
            mx = std::max(mx, Rat(t - last[static_cast<size_t>(j)]) * inst.h(j));
        int id = policy(t);
        last[static_cast<size_t>(id)] = t;
        out << t << ",b" << id + 1 << "," << to_frac_string(mx) << "\n";
    }
    return out.str();
}

std::string report_to_json(const SimulationReport& rep) {
    nlohmann::json j;
    j["horizon"] = rep.horizon;
    j["elevation"] = to_frac_string(rep.elevation);
    j["elevation_decimal"] = to_decimal_string(rep.elevation);
    if (rep.period_detected) j["period"] = *rep.period_detected;
    auto arr = nlohmann::json::array();
    for (const auto& m : rep.per_bamboo_max) arr.push_back(to_frac_string(m));
    j["per_bamboo_max"] = arr;
    return j.dump(2);
}

}  // namespace bgt
