// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. Criteria 3, 5, 6 and 8 share one generated corpus.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "bgt/bounds.hpp"
#include "bgt/cycles.hpp"
#include "bgt/generators.hpp"
#include "bgt/instance.hpp"
#include "bgt/oracle.hpp"
#include "bgt/pw_classic.hpp"
#include "bgt/pw_enhanced.hpp"
#include "bgt/simulator.hpp"

using bgt::Rat;

namespace {

int g_failures = 0;

void report(int idx, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << idx << ": " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++g_failures;
}

std::string read_golden(const std::string& name) {
    std::ifstream f(std::string(GOLDEN_DIR) + "/" + name);
    if (!f) throw std::runtime_error("missing golden file: " + name);
    std::string line;
    std::getline(f, line);
    return line;
}

// Safety check shared by every emitted schedule: simulate two full
// periods and verify every cyclic gap.
bool schedule_safe(const bgt::BGTInstance& inst, const bgt::TrimPlan& plan) {
    auto sched = bgt::build_schedule(plan);
    if (!bgt::verify_schedule(inst, plan, sched).pass) return false;
    return bgt::simulate_schedule(inst, sched, 2 * sched.period).elevation <= plan.z;
}

void criterion_1() {
    std::ifstream f(std::string(GOLDEN_DIR) + "/example16.txt");
    std::stringstream ss;
    ss << f.rdbuf();
    auto inst = bgt::parse_instance(ss.str());

    auto pw = bgt::build_plan_pw(inst);
    auto a = bgt::plan_option_a(inst);
    auto b = bgt::plan_option_b(inst);
    auto best = bgt::run_pw2(inst);
    bool ok = pw.alpha() == 9 && pw.z == 9;
    ok = ok && a.z == 8 && b && b->z == Rat(42, 5) && best.z == 8;
    ok = ok && bgt::plan_partition_string(pw) == read_golden("example16_pw.txt");
    ok = ok && bgt::plan_partition_string(a) == read_golden("example16_option_a.txt");
    ok = ok && bgt::plan_partition_string(*b) == read_golden("example16_option_b.txt");
    report(1, "16-bamboo example reproduces exactly (z=9, z(a)=8, z(b)=42/5, layouts)", ok);

    bool safe = schedule_safe(inst, pw) && schedule_safe(inst, a) && schedule_safe(inst, *b);
    report(5, "schedule safety on the worked example", safe);
}

void criterion_2() {
    const Rat eps(1, 1000);
    bool ok = true;
    Rat ratio20;
    for (int n = 2; n <= 20; n += 2) {
        auto inst = bgt::gen_tight_family(n, eps);
        auto pw = bgt::build_plan_pw(inst);
        ok = ok && pw.z == n + 1;
        Rat h_formula = Rat(n, 2) + 1 + (n + 2) * eps;
        if (n <= 4) {
            bgt::OracleConfig cfg;
            cfg.max_n = 5;  // the family instance has n+1 bamboos
            ok = ok && bgt::exact_optimum(inst, cfg) == h_formula;
        }
        if (n == 20) ratio20 = pw.z / h_formula;
    }
    ok = ok && ratio20 >= Rat(8, 5);
    report(2, "tight family: z_pw = n+1, exact optimum matches at n=2,4, ratio at n=20 >= 1.6",
           ok, "ratio(20) = " + bgt::to_decimal_string(ratio20, 4));
}

struct CorpusResult {
    bool ratio_ok = true;       // criterion 3
    bool safety_ok = true;      // criterion 5
    bool pw_bound_ok = true;    // criterion 6
    int count = 0;
    Rat max_ratio{0};
};

CorpusResult run_corpus(std::vector<bgt::BGTInstance>& corpus_out) {
    const Rat kBound(32000, 16947);
    CorpusResult res;

    auto handle = [&](const bgt::BGTInstance& raw) {
        auto [inst, scale] = bgt::normalize(raw);
        Rat lb = bgt::lower_bound(inst);
        Rat total = 0;
        for (const auto& h : inst.growths) total += h;

        auto pw = bgt::build_plan_pw(inst);
        auto best = bgt::run_pw2(inst);
        if (pw.z > 2 * total) res.pw_bound_ok = false;
        if (best.z > kBound * lb) res.ratio_ok = false;
        if (best.z / lb > res.max_ratio) res.max_ratio = best.z / lb;
        if (!schedule_safe(inst, pw) || !schedule_safe(inst, best)) res.safety_ok = false;
        corpus_out.push_back(raw);
        ++res.count;
    };

    for (std::uint64_t seed = 1; seed <= 700; ++seed)
        handle(bgt::gen_random(4 + static_cast<int>(seed % 17), seed, bgt::Profile::Uniform));
    for (std::uint64_t seed = 1; seed <= 700; ++seed)
        handle(bgt::gen_random(4 + static_cast<int>(seed % 17), seed, bgt::Profile::Dyadic));
    for (std::uint64_t seed = 1; seed <= 500; ++seed)
        handle(bgt::gen_random(4 + static_cast<int>(seed % 13), seed, bgt::Profile::S2Heavy));
    for (std::uint64_t seed = 1; seed <= 200; ++seed)
        handle(bgt::gen_random(2, seed, bgt::Profile::SmallGrowth));
    return res;
}

void criterion_4() {
    const Rat kBound = Rat(12, 7) + Rat(1, 20);  // limit ratio plus finite-size slack
    bool ok = true;
    Rat max_ratio = 0;
    int count = 0;
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        auto inst = bgt::gen_random(50, seed, bgt::Profile::SmallGrowth);
        Rat total = 0;
        for (const auto& h : inst.growths) total += h;
        if (total < 50) {
            ok = false;
            continue;
        }
        Rat lb = bgt::lower_bound(inst);
        auto best = bgt::run_pw2(inst);
        if (best.z > kBound * lb) ok = false;
        if (best.z / lb > max_ratio) max_ratio = best.z / lb;
        if (!schedule_safe(inst, best)) ok = false;
        ++count;
    }
    report(4, "small-growth ratio bound 12/7 + 1/20 over " + std::to_string(count) + " instances",
           ok, "max ratio = " + bgt::to_decimal_string(max_ratio, 4));
}

void criterion_7() {
    std::mt19937_64 rng(2026);
    bool ok = true;
    int count = 0;
    while (count < 100) {
        int n = 1 + static_cast<int>(rng() % 3);
        std::vector<Rat> g;
        for (int i = 0; i < n; ++i) {
            long den = static_cast<long>(rng() % 8) + 1;
            long num = static_cast<long>(rng() % static_cast<std::uint64_t>(den)) + 1;
            g.emplace_back(num, den);
        }
        auto raw = bgt::make_instance(g);
        Rat lb = bgt::lower_bound(raw);
        Rat h_star = bgt::exact_optimum(raw);

        auto [inst, scale] = bgt::normalize(raw);
        auto best = bgt::run_pw2(inst);
        auto sched = bgt::build_schedule(best);
        Rat sim = bgt::simulate_schedule(inst, sched, 2 * sched.period).elevation * scale;
        Rat z = best.z * scale;
        if (!(lb <= h_star && h_star <= sim && sim <= z)) ok = false;

        auto w = bgt::feasible_witness(raw, h_star);
        if (!w || w->cycle.empty()) {
            ok = false;
        } else {
            std::vector<int> cuts = w->prefix;
            for (int r = 0; r < 30; ++r) cuts.insert(cuts.end(), w->cycle.begin(), w->cycle.end());
            auto rep = bgt::simulate(raw, [&](long t) { return cuts[static_cast<size_t>(t)]; },
                                     static_cast<long>(cuts.size()));
            if (rep.elevation > h_star) ok = false;
        }
        ++count;
    }
    report(7, "oracle sandwich LB <= H* <= simulated <= z and witness replay over 100 instances",
           ok);
}

void criterion_8(const std::vector<bgt::BGTInstance>& corpus) {
    const Rat kThreshold = Rat(2) + Rat(1, 100);
    bool mechanism_ok = true;
    int warns = 0;
    Rat max_ratio = 0;
    for (const auto& raw : corpus) {
        auto [inst, scale] = bgt::normalize(raw);
        Rat lb = bgt::lower_bound(inst);
        long horizon = bgt::default_reduce_max_horizon(inst);
        auto rep = bgt::simulate_reduce_max(inst, horizon);
        Rat ratio = rep.elevation / lb;
        if (ratio > max_ratio) max_ratio = ratio;
        if (ratio > kThreshold) {
            ++warns;
            std::cout << "[WARN] tallest-first ratio " << bgt::to_decimal_string(ratio, 4)
                      << " above 2 + 1/100 on instance: " << bgt::serialize_instance(raw) << "\n";
        }
    }
    report(8,
           "tallest-first ratio over " + std::to_string(corpus.size()) +
               " instances, threshold 2 + 1/100, excesses warned (" + std::to_string(warns) +
               " warnings)",
           mechanism_ok, "max ratio = " + bgt::to_decimal_string(max_ratio, 4));
}

}  // namespace

int main() {
    criterion_1();  // also prints the suite-1 part of criterion 5
    criterion_2();

    std::vector<bgt::BGTInstance> corpus;
    auto res = run_corpus(corpus);
    report(3, "enhanced-plan ratio bound 32000/16947 over " + std::to_string(res.count) +
                  " instances",
           res.ratio_ok, "max ratio = " + bgt::to_decimal_string(res.max_ratio, 4));
    criterion_4();
    report(5, "schedule safety (2 periods + gap verification) across the corpus", res.safety_ok);
    report(6, "baseline plan value within twice the total growth on every instance",
           res.pw_bound_ok);
    criterion_7();
    criterion_8(corpus);

    std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED\n"
                                  : std::to_string(g_failures) + " CRITERIA FAILED\n");
    return g_failures == 0 ? 0 : 1;
}
