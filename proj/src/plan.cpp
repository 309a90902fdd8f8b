#include "bgt/plan.hpp"

#include <sstream>

#include <json.hpp>

namespace bgt {

std::string to_string(PlanOption opt) {
    switch (opt) {
        case PlanOption::PW: return "PW";
        case PlanOption::A: return "a";
        case PlanOption::B: return "b";
    }
    return "?";
}

std::string plan_to_json(const TrimPlan& plan) {
    nlohmann::json j;
    j["option"] = to_string(plan.option);
    j["z"] = to_frac_string(plan.z);
    j["alpha"] = plan.alpha();
    if (plan.j_star) j["j_star"] = *plan.j_star + 1;
    j["remainder_bins"] = plan.remainder_bins;
    j["remainder_bins_formula"] = plan.remainder_bins_formula;
    j["remainder_splits"] = plan.remainder_splits;
    auto parts = nlohmann::json::array();
    for (const auto& p : plan.partitions) {
        nlohmann::json pj;
        pj["label"] = p.label;
        auto members = nlohmann::json::array();
        for (const auto& m : p.members) {
            members.push_back({{"bamboo", m.bamboo + 1},
                               {"h_mod", to_frac_string(m.h_mod)},
                               {"deadline", m.deadline}});
        }
        pj["members"] = members;
        parts.push_back(pj);
    }
    j["partitions"] = parts;
    return j.dump(2);
}

std::string plan_partition_string(const TrimPlan& plan) {
    std::ostringstream out;
    for (size_t i = 0; i < plan.partitions.size(); ++i) {
        if (i) out << ' ';
        out << 'P' << i + 1 << ":[";
        const auto& ms = plan.partitions[i].members;
        for (size_t k = 0; k < ms.size(); ++k) {
            if (k) out << ',';
            out << 'b' << ms[k].bamboo + 1;
        }
        out << ']';
    }
    return out.str();
}

}  // namespace bgt
