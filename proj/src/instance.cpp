#include "bgt/instance.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bgt {

BGTInstance make_instance(std::vector<Rat> growths) {
    if (growths.empty()) throw EmptyInstanceError();
    for (const auto& g : growths)
        if (g <= 0) throw NonPositiveGrowthError(to_frac_string(g));

    BGTInstance inst;
    std::vector<int> order(growths.size());
    std::iota(order.begin(), order.end(), 0);
    // non-increasing growth, ties by input position
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return growths[static_cast<size_t>(a)] > growths[static_cast<size_t>(b)]; });
    inst.growths.reserve(growths.size());
    inst.original_id = order;
    for (int idx : order) inst.growths.push_back(growths[static_cast<size_t>(idx)]);
    return inst;
}

BGTInstance parse_instance(std::string_view text) {
    std::vector<Rat> growths;
    std::string current;
    size_t pos = 0;
    while (pos <= text.size()) {
        bool at_end = pos == text.size();
        char c = at_end ? '\n' : text[pos];
        if (c == '#') {
            // comment runs to end of line
            while (pos < text.size() && text[pos] != '\n') ++pos;
            continue;
        }
        if (c == ',' || c == '\n' || c == '\r' || std::isspace(static_cast<unsigned char>(c)) || at_end) {
            if (!current.empty()) {
                auto v = try_parse_rat(current);
                if (!v) throw TokenError(current);
                if (*v <= 0) throw NonPositiveGrowthError(current);
                growths.push_back(*v);
                current.clear();
            }
        } else {
            current += c;
        }
        ++pos;
    }
    return make_instance(std::move(growths));
}

std::string serialize_instance(const BGTInstance& inst) {
    std::ostringstream out;
    for (const auto& g : inst.growths) out << to_frac_string(g) << "\n";
    return out.str();
}

std::pair<BGTInstance, Rat> normalize(const BGTInstance& inst) {
    if (inst.growths.empty()) throw EmptyInstanceError();
    Rat scale = inst.growths.front();
    BGTInstance out = inst;
    out.scale = scale;
    for (auto& g : out.growths) g /= scale;
    return {out, scale};
}

}  // namespace bgt
