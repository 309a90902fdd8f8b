#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bgt/generators.hpp"
#include "bgt/instance.hpp"

namespace bgt {

struct GeneratorBatch {
    Profile profile = Profile::Uniform;
    int n = 16;
    int count = 1;
    std::uint64_t seed = 1;
};

struct TightFamilyPoint {
    int n = 2;
    Rat eps{1, 1000};
};

// Identical spec + seed => byte-identical report files.
struct ExperimentSpec {
    std::string name = "experiment";
    std::vector<GeneratorBatch> batches;
    std::vector<TightFamilyPoint> tight_family;
    bool run_pw = true;
    bool run_pw2 = true;
    bool run_reduce_max = false;
    bool run_oracle = false;
    long horizon = 0;  // 0 => per-instance default for ReduceMax
    int oracle_max_n = 4;
    std::string out_csv;
    std::string out_json;
};

ExperimentSpec spec_from_json(const std::string& text);

struct ExperimentRow {
    std::string id;
    std::string generator;
    std::uint64_t seed = 0;
    int n = 0;
    Rat lb;
    std::optional<Rat> z_pw, sim_pw;
    std::optional<Rat> z_a, z_b, z_pw2, sim_pw2;
    std::string option;
    std::optional<Rat> oracle_hstar;
    std::optional<Rat> reduce_max_elev;
    long reduce_max_horizon = 0;
    std::vector<std::string> violations;  // hard invariant failures
    std::vector<std::string> warnings;    // e.g. ReduceMax conjecture excess
};

struct ExperimentReport {
    std::vector<ExperimentRow> rows;
    std::optional<Rat> max_ratio_pw2_lb;
    std::optional<Rat> max_ratio_pw_lb;
    std::optional<Rat> max_ratio_reduce_max_lb;
    int hard_failures = 0;
    int warn_count = 0;
};

// Runs every batch instance through the selected algorithms, checking the
// exact-rational invariants on each row (LB <= H* <= simulated elevation
// <= min z; PW <= 2 sum h; ratio bound).
ExperimentReport run_experiment(const ExperimentSpec& spec);

// Fixed column order, documented in the README.
std::string report_to_csv(const ExperimentReport& rep);
std::string experiment_report_to_json(const ExperimentReport& rep);

// Writes out_csv / out_json when set in the spec.
void write_report_files(const ExperimentSpec& spec, const ExperimentReport& rep);

}  // namespace bgt
