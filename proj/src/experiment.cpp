#include "bgt/experiment.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bgt/bounds.hpp"
#include "bgt/oracle.hpp"
#include "bgt/pw_classic.hpp"
#include "bgt/pw_enhanced.hpp"
#include "bgt/simulator.hpp"

namespace bgt {

namespace {

const Rat kRatioBound(32000, 16947);
const Rat kReduceMaxWarn = Rat(2) + Rat(1, 100);

std::string opt_frac(const std::optional<Rat>& r) { return r ? to_frac_string(*r) : ""; }

}  // namespace

ExperimentSpec spec_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ExperimentSpec spec;
    spec.name = j.value("name", "experiment");
    for (const auto& b : j.value("batches", nlohmann::json::array())) {
        GeneratorBatch gb;
        gb.profile = profile_from_string(b.at("profile").get<std::string>());
        gb.n = b.at("n").get<int>();
        gb.count = b.value("count", 1);
        gb.seed = b.value("seed", 1ULL);
        spec.batches.push_back(gb);
    }
    for (const auto& l : j.value("tight_family", nlohmann::json::array())) {
        TightFamilyPoint p;
        p.n = l.at("n").get<int>();
        p.eps = parse_rat(l.value("eps", "1/1000"));
        spec.tight_family.push_back(p);
    }
    if (j.contains("algorithms")) {
        spec.run_pw = spec.run_pw2 = spec.run_reduce_max = spec.run_oracle = false;
        for (const auto& a : j["algorithms"]) {
            std::string s = a.get<std::string>();
            if (s == "pw") spec.run_pw = true;
            else if (s == "pw2") spec.run_pw2 = true;
            else if (s == "reducemax") spec.run_reduce_max = true;
            else if (s == "oracle") spec.run_oracle = true;
            else throw std::invalid_argument("unknown algorithm: " + s);
        }
    }
    spec.horizon = j.value("horizon", 0L);
    spec.oracle_max_n = j.value("oracle_max_n", 4);
    spec.out_csv = j.value("out_csv", "");
    spec.out_json = j.value("out_json", "");
    return spec;
}

namespace {

void process_instance(const ExperimentSpec& spec, const BGTInstance& inst, ExperimentRow& row) {
    row.n = inst.n();
    row.lb = lower_bound(inst);
    Rat total = inst.sum();

    if (spec.run_pw) {
        TrimPlan plan = build_plan_pw(inst);
        row.z_pw = plan.z;
        PeriodicSchedule sched = build_schedule(plan);
        SimulationReport sim = simulate_schedule(inst, sched, 2 * sched.period);
        row.sim_pw = sim.elevation;
        if (!verify_schedule(inst, plan, sched).pass) row.violations.push_back("pw:verify");
        if (sim.elevation > plan.z) row.violations.push_back("pw:sim>z");
        if (plan.z > 2 * total) row.violations.push_back("pw:z>2*sum");
    }

    if (spec.run_pw2) {
        TrimPlan a = plan_option_a(inst);
        auto b = plan_option_b(inst);
        row.z_a = a.z;
        if (b) row.z_b = b->z;
        const TrimPlan& chosen = (b && b->z < a.z) ? *b : a;
        row.z_pw2 = chosen.z;
        row.option = to_string(chosen.option);
        PeriodicSchedule sched = build_schedule(chosen);
        SimulationReport sim = simulate_schedule(inst, sched, 2 * sched.period);
        row.sim_pw2 = sim.elevation;
        if (!verify_schedule(inst, chosen, sched).pass) row.violations.push_back("pw2:verify");
        if (sim.elevation > chosen.z) row.violations.push_back("pw2:sim>z");
        if (chosen.z < row.lb) row.violations.push_back("pw2:z<lb");
        if (chosen.z > kRatioBound * row.lb) row.violations.push_back("pw2:ratio>bound");
    }

    if (spec.run_oracle && inst.n() <= spec.oracle_max_n) {
        OracleConfig cfg;
        cfg.max_n = spec.oracle_max_n;
        try {
            Rat hstar = exact_optimum(inst, cfg);
            row.oracle_hstar = hstar;
            if (hstar < row.lb) row.violations.push_back("oracle:hstar<lb");
            if (row.sim_pw2 && *row.sim_pw2 < hstar) row.violations.push_back("oracle:sim<hstar");
            if (row.z_pw2 && *row.z_pw2 < hstar) row.violations.push_back("oracle:z<hstar");
        } catch (const OracleLimitError&) {
            // leave H* blank when the state space is out of reach
        }
    }

    if (spec.run_reduce_max) {
        long horizon = spec.horizon > 0 ? spec.horizon : default_reduce_max_horizon(inst);
        row.reduce_max_horizon = horizon;
        SimulationReport sim = simulate_reduce_max(inst, horizon);
        row.reduce_max_elev = sim.elevation;
        if (sim.elevation > kReduceMaxWarn * row.lb)
            row.warnings.push_back("reducemax:elev>(2+1/100)*lb instance=" + serialize_instance(inst));
    }
}

}  // namespace

ExperimentReport run_experiment(const ExperimentSpec& spec) {
    ExperimentReport rep;
    std::vector<std::pair<ExperimentRow, BGTInstance>> work;

    for (const auto& batch : spec.batches) {
        for (int i = 0; i < batch.count; ++i) {
            std::uint64_t seed = batch.seed + static_cast<std::uint64_t>(i);
            ExperimentRow row;
            row.generator = to_string(batch.profile);
            row.seed = seed;
            row.id = row.generator + "-" + std::to_string(seed);
            work.emplace_back(std::move(row), gen_random(batch.n, seed, batch.profile));
        }
    }
    for (const auto& point : spec.tight_family) {
        ExperimentRow row;
        row.generator = "tight_family";
        row.id = "tight_family-n" + std::to_string(point.n);
        work.emplace_back(std::move(row), gen_tight_family(point.n, point.eps));
    }

    for (auto& [row, inst] : work) {
        process_instance(spec, inst, row);
        if (row.z_pw2) {
            Rat ratio = *row.z_pw2 / row.lb;
            if (!rep.max_ratio_pw2_lb || ratio > *rep.max_ratio_pw2_lb) rep.max_ratio_pw2_lb = ratio;
        }
        if (row.z_pw) {
            Rat ratio = *row.z_pw / row.lb;
            if (!rep.max_ratio_pw_lb || ratio > *rep.max_ratio_pw_lb) rep.max_ratio_pw_lb = ratio;
        }
        if (row.reduce_max_elev) {
            Rat ratio = *row.reduce_max_elev / row.lb;
            if (!rep.max_ratio_reduce_max_lb || ratio > *rep.max_ratio_reduce_max_lb)
                rep.max_ratio_reduce_max_lb = ratio;
        }
        rep.hard_failures += static_cast<int>(row.violations.size());
        rep.warn_count += static_cast<int>(row.warnings.size());
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::string report_to_csv(const ExperimentReport& rep) {
    std::ostringstream out;
    out << "id,generator,seed,n,lb,z_pw,sim_pw,z_pw2_a,z_pw2_b,z_pw2,option,sim_pw2,"
           "oracle_hstar,reducemax_elev,reducemax_horizon,ratio_pw2_lb,ratio_pw2_lb_dec,"
           "ratio_reducemax_lb,ratio_reducemax_lb_dec,status\n";
    for (const auto& r : rep.rows) {
        out << r.id << ',' << r.generator << ',' << r.seed << ',' << r.n << ','
            << to_frac_string(r.lb) << ',' << opt_frac(r.z_pw) << ',' << opt_frac(r.sim_pw) << ','
            << opt_frac(r.z_a) << ',' << opt_frac(r.z_b) << ',' << opt_frac(r.z_pw2) << ','
            << r.option << ',' << opt_frac(r.sim_pw2) << ',' << opt_frac(r.oracle_hstar) << ','
            << opt_frac(r.reduce_max_elev) << ',' << r.reduce_max_horizon << ',';
        if (r.z_pw2) {
            Rat ratio = *r.z_pw2 / r.lb;
            out << to_frac_string(ratio) << ',' << to_decimal_string(ratio);
        } else {
            out << ',';
        }
        out << ',';
        if (r.reduce_max_elev) {
            Rat ratio = *r.reduce_max_elev / r.lb;
            out << to_frac_string(ratio) << ',' << to_decimal_string(ratio);
        } else {
            out << ',';
        }
        out << ',';
        if (!r.violations.empty())
            out << "FAIL";
        else if (!r.warnings.empty())
            out << "WARN";
        else
            out << "ok";
        out << '\n';
    }
    // summary row: max ratios against the 2, 12/7 and ratio thresholds
    out << "summary,,,,,,,,,,,,,,,";
    if (rep.max_ratio_pw2_lb)
        out << to_frac_string(*rep.max_ratio_pw2_lb) << ',' << to_decimal_string(*rep.max_ratio_pw2_lb);
    else
        out << ',';
    out << ',';
    if (rep.max_ratio_reduce_max_lb)
        out << to_frac_string(*rep.max_ratio_reduce_max_lb) << ','
            << to_decimal_string(*rep.max_ratio_reduce_max_lb);
    else
        out << ',';
    out << ',' << (rep.hard_failures > 0 ? "FAIL" : "ok") << '\n';
    return out.str();
}

std::string experiment_report_to_json(const ExperimentReport& rep) {
    nlohmann::json j;
    auto rows = nlohmann::json::array();
    for (const auto& r : rep.rows) {
        nlohmann::json rj;
        rj["id"] = r.id;
        rj["generator"] = r.generator;
        rj["seed"] = r.seed;
        rj["n"] = r.n;
        rj["lb"] = to_frac_string(r.lb);
        if (r.z_pw) rj["z_pw"] = to_frac_string(*r.z_pw);
        if (r.sim_pw) rj["sim_pw"] = to_frac_string(*r.sim_pw);
        if (r.z_a) rj["z_pw2_a"] = to_frac_string(*r.z_a);
        if (r.z_b) rj["z_pw2_b"] = to_frac_string(*r.z_b);
        if (r.z_pw2) {
            rj["z_pw2"] = to_frac_string(*r.z_pw2);
            rj["option"] = r.option;
            rj["ratio_pw2_lb"] = to_frac_string(*r.z_pw2 / r.lb);
        }
        if (r.sim_pw2) rj["sim_pw2"] = to_frac_string(*r.sim_pw2);
        if (r.oracle_hstar) rj["oracle_hstar"] = to_frac_string(*r.oracle_hstar);
        if (r.reduce_max_elev) {
            rj["reducemax_elev"] = to_frac_string(*r.reduce_max_elev);
            rj["reducemax_horizon"] = r.reduce_max_horizon;
        }
        rj["violations"] = r.violations;
        rj["warnings"] = r.warnings;
        rows.push_back(std::move(rj));
    }
    j["rows"] = rows;
    nlohmann::json summary;
    if (rep.max_ratio_pw2_lb) summary["max_ratio_pw2_lb"] = to_frac_string(*rep.max_ratio_pw2_lb);
    if (rep.max_ratio_pw_lb) summary["max_ratio_pw_lb"] = to_frac_string(*rep.max_ratio_pw_lb);
    if (rep.max_ratio_reduce_max_lb)
        summary["max_ratio_reducemax_lb"] = to_frac_string(*rep.max_ratio_reduce_max_lb);
    summary["hard_failures"] = rep.hard_failures;
    summary["warnings"] = rep.warn_count;
    j["summary"] = summary;
    return j.dump(2);
}

void write_report_files(const ExperimentSpec& spec, const ExperimentReport& rep) {
    if (!spec.out_csv.empty()) {
        std::ofstream f(spec.out_csv);
        f << report_to_csv(rep);
    }
    if (!spec.out_json.empty()) {
        std::ofstream f(spec.out_json);
        f << experiment_report_to_json(rep);
    }
}

}  // namespace bgt
