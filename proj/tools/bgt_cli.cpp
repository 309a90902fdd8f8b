// Command-line front end: solve a single instance, drive an experiment
// spec, or reproduce the built-in worked examples.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bgt/bounds.hpp"
#include "bgt/cycles.hpp"
#include "bgt/experiment.hpp"
#include "bgt/generators.hpp"
#include "bgt/instance.hpp"
#include "bgt/oracle.hpp"
#include "bgt/pw_classic.hpp"
#include "bgt/pw_enhanced.hpp"
#include "bgt/simulator.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int solve_command(const std::string& file, const std::string& algo, long horizon, bool as_json,
                  bool as_csv, long dump_days) {
    bgt::BGTInstance raw = bgt::parse_instance(read_file(file));
    auto [inst, scale] = bgt::normalize(raw);
    bgt::Rat lb = bgt::lower_bound(raw);
    int failures = 0;

    nlohmann::json out;
    out["file"] = file;
    out["n"] = inst.n();
    out["lb"] = bgt::to_frac_string(lb);
    out["scale"] = bgt::to_frac_string(scale);

    if (algo == "pw" || algo == "pw2") {
        bgt::TrimPlan plan = algo == "pw" ? bgt::build_plan_pw(inst) : bgt::run_pw2(inst);
        bgt::PeriodicSchedule sched = bgt::build_schedule(plan);
        long h = horizon > 0 ? horizon : 2 * sched.period;
        bgt::SimulationReport sim = bgt::simulate_schedule(inst, sched, h);
        bgt::VerificationReport ver = bgt::verify_schedule(inst, plan, sched);
        bgt::Rat z = plan.z * scale;
        bgt::Rat elev = sim.elevation * scale;
        if (!ver.pass || sim.elevation > plan.z) ++failures;

        out["algo"] = algo;
        out["option"] = bgt::to_string(plan.option);
        out["z"] = bgt::to_frac_string(z);
        out["z_decimal"] = bgt::to_decimal_string(z);
        out["alpha"] = plan.alpha();
        out["elevation"] = bgt::to_frac_string(elev);
        out["period"] = sched.period;
        out["verified"] = ver.pass;
        out["plan"] = nlohmann::json::parse(bgt::plan_to_json(plan));
        if (!as_json && !as_csv) {
            std::cout << "algo: " << algo << " (option " << bgt::to_string(plan.option) << ")\n"
                      << "partitions: " << bgt::plan_partition_string(plan) << "\n"
                      << "alpha: " << plan.alpha() << "\n"
                      << "z: " << bgt::to_frac_string(z) << " (" << bgt::to_decimal_string(z) << ")\n"
                      << "LB: " << bgt::to_frac_string(lb) << "\n"
                      << "simulated elevation (" << h << " days): " << bgt::to_frac_string(elev) << "\n"
                      << "schedule verified: " << (ver.pass ? "yes" : "NO") << "\n";
            if (dump_days > 0) std::cout << bgt::dump_schedule(sched, dump_days);
        }
    } else if (algo == "reducemax") {
        long h = horizon > 0 ? horizon : bgt::default_reduce_max_horizon(inst);
        bgt::SimulationReport sim = bgt::simulate_reduce_max(inst, h);
        bgt::Rat elev = sim.elevation * scale;
        out["algo"] = algo;
        out["horizon"] = h;
        out["elevation"] = bgt::to_frac_string(elev);
        out["elevation_over_lb"] = bgt::to_decimal_string(elev / lb);
        if (!as_json && !as_csv)
            std::cout << "algo: reducemax\nhorizon: " << h << "\nelevation: "
                      << bgt::to_frac_string(elev) << " (" << bgt::to_decimal_string(elev)
                      << ")\nelevation/LB: " << bgt::to_decimal_string(elev / lb) << "\n";
    } else if (algo == "oracle") {
        bgt::Rat hstar = bgt::exact_optimum(raw);
        out["algo"] = algo;
        out["hstar"] = bgt::to_frac_string(hstar);
        auto w = bgt::feasible_witness(raw, hstar);
        if (w) {
            auto arr = nlohmann::json::array();
            for (int c : w->cycle) arr.push_back(c + 1);
            out["witness_cycle"] = arr;
        }
        if (!as_json && !as_csv) {
            std::cout << "H*: " << bgt::to_frac_string(hstar) << " ("
                      << bgt::to_decimal_string(hstar) << ")\n";
            if (w) {
                std::cout << "witness cycle:";
                for (int c : w->cycle) std::cout << " b" << c + 1;
                std::cout << "\n";
            }
        }
    } else {
        std::cerr << "unknown algorithm: " << algo << "\n";
        return 2;
    }

    if (as_json) std::cout << out.dump(2) << "\n";
    if (as_csv) {
        std::cout << "file,algo,n,lb,value\n"
                  << file << ',' << algo << ',' << inst.n() << ',' << bgt::to_frac_string(lb) << ',';
        if (out.contains("z")) std::cout << out["z"].get<std::string>();
        else if (out.contains("elevation")) std::cout << out["elevation"].get<std::string>();
        else if (out.contains("hstar")) std::cout << out["hstar"].get<std::string>();
        std::cout << "\n";
    }
    return failures == 0 ? 0 : 1;
}

int check(bool cond, const std::string& what) {
    std::cout << (cond ? "PASS " : "FAIL ") << what << "\n";
    return cond ? 0 : 1;
}

// Reproduces the 16-bamboo worked example and the tight family sweep.
int paper_tables() {
    int failures = 0;
    bgt::BGTInstance table2 = bgt::parse_instance(
        "1, 0.83, 0.6, 0.55, 0.45, 0.4, 0.32, 0.29, 0.28, 0.27, 0.26, 0.22, 0.16, 0.15, 0.1, 0.05");

    bgt::TrimPlan pw = bgt::build_plan_pw(table2);
    std::cout << "PW partitions:   " << bgt::plan_partition_string(pw) << "\n";
    failures += check(pw.z == 9, "PW value z = 9");
    failures += check(
        bgt::plan_partition_string(pw) ==
            "P1:[b1] P2:[b2] P3:[b3] P4:[b4] P5:[b5,b6] P6:[b7,b8] P7:[b9,b10] "
            "P8:[b11,b12,b13] P9:[b14,b15,b16]",
        "PW partition layout");

    bgt::TrimPlan a = bgt::plan_option_a(table2);
    auto b = bgt::plan_option_b(table2);
    std::cout << "PW'' (a):        " << bgt::plan_partition_string(a) << "\n";
    if (b) std::cout << "PW'' (b):        " << bgt::plan_partition_string(*b) << "\n";
    failures += check(a.z == 8, "PW'' option (a) value z(a) = 8");
    failures += check(b && b->z == bgt::Rat(42, 5), "PW'' option (b) value z(b) = 42/5");
    failures += check(
        bgt::plan_partition_string(a) ==
            "P1:[b1] P2:[b2] P3:[b3] P4:[b4] P5:[b5,b6] P6:[b12,b15,b16] "
            "P7:[b7,b8,b9] P8:[b10,b11,b13,b14]",
        "PW'' option (a) partition layout");
    failures += check(
        b && bgt::plan_partition_string(*b) ==
                 "P1:[b1] P2:[b2] P3:[b3,b4] P4:[b5,b6] P5:[b12,b15,b16] "
                 "P6:[b7,b8,b9] P7:[b10,b11,b13,b14]",
        "PW'' option (b) partition layout");
    bgt::TrimPlan best = bgt::run_pw2(table2);
    failures += check(best.z == 8 && best.option == bgt::PlanOption::A, "PW'' returns min{z(a),z(b)} = 8");

    std::cout << "\ntight family sweep (eps = 1/1000):\n";
    for (int n = 2; n <= 20; n += 2) {
        bgt::BGTInstance inst = bgt::gen_tight_family(n, bgt::Rat(1, 1000));
        bgt::TrimPlan plan = bgt::build_plan_pw(inst);
        std::cout << "  n=" << n << "  z_pw=" << bgt::to_frac_string(plan.z)
                  << "  lb=" << bgt::to_frac_string(bgt::lower_bound(inst)) << "\n";
        failures += check(plan.z == n + 1, "tight family n=" + std::to_string(n) + ": z_pw = n+1");
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bamboo garden trimming: pinwheel algorithms, bounds, simulator, exact oracle"};
    app.require_subcommand(1);

    std::string file, algo = "pw2";
    long horizon = 0, dump_days = 0;
    bool as_json = false, as_csv = false;
    auto* solve = app.add_subcommand("solve", "run one algorithm on an instance file");
    solve->add_option("file", file, "instance file")->required();
    solve->add_option("--algo", algo, "pw|pw2|reducemax|oracle");
    solve->add_option("--horizon", horizon, "simulation horizon in days (0 = default)");
    solve->add_flag("--json", as_json, "emit JSON");
    solve->add_flag("--csv", as_csv, "emit CSV");
    solve->add_option("--dump-days", dump_days, "print the first N days of the schedule");

    std::string spec_file;
    auto* exp = app.add_subcommand("experiment", "run an experiment spec (JSON)");
    exp->add_option("spec", spec_file, "experiment spec file")->required();

    auto* tables = app.add_subcommand("paper-tables", "reproduce the built-in worked examples");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return solve_command(file, algo, horizon, as_json, as_csv, dump_days);
        if (exp->parsed()) {
            bgt::ExperimentSpec spec = bgt::spec_from_json(read_file(spec_file));
            bgt::ExperimentReport rep = bgt::run_experiment(spec);
            bgt::write_report_files(spec, rep);
            std::cout << "instances: " << rep.rows.size() << "\n";
            if (rep.max_ratio_pw2_lb)
                std::cout << "max z_pw2/LB: " << bgt::to_frac_string(*rep.max_ratio_pw2_lb) << " ("
                          << bgt::to_decimal_string(*rep.max_ratio_pw2_lb) << ")\n";
            if (rep.max_ratio_reduce_max_lb)
                std::cout << "max reducemax/LB: " << bgt::to_decimal_string(*rep.max_ratio_reduce_max_lb)
                          << "\n";
            for (const auto& row : rep.rows)
                for (const auto& w : row.warnings) std::cout << "WARN " << row.id << ": " << w << "\n";
            std::cout << "hard failures: " << rep.hard_failures << ", warnings: " << rep.warn_count
                      << "\n";
            return rep.hard_failures == 0 ? 0 : 1;
        }
        if (tables->parsed()) return paper_tables();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
