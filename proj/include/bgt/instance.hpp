#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bgt/rational.hpp"

namespace bgt {

struct InstanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyInstanceError : InstanceError {
    EmptyInstanceError() : InstanceError("instance contains no growth rates") {}
};
struct NonPositiveGrowthError : InstanceError {
    explicit NonPositiveGrowthError(const std::string& tok)
        : InstanceError("non-positive growth rate: " + tok) {}
};
struct TokenError : InstanceError {
    explicit TokenError(const std::string& tok)
        : InstanceError("unparsable growth token: '" + tok + "'") {}
};

// A BGT instance: growth rates sorted non-increasing, h(1) first.
// original_id[i] is the position of growths[i] in the input, so reports
// can refer back to the caller's numbering.
struct BGTInstance {
    std::vector<Rat> growths;
    std::vector<int> original_id;
    Rat scale{1};  // original h(1) when this instance came out of normalize()

    int n() const { return static_cast<int>(growths.size()); }
    const Rat& h(int j) const { return growths[static_cast<size_t>(j)]; }

    Rat sum() const {
        Rat s = 0;
        for (const auto& g : growths) s += g;
        return s;
    }

    bool normalized() const { return !growths.empty() && growths.front() == 1; }
};

// Builds a sorted, validated instance from explicit growth rates.
BGTInstance make_instance(std::vector<Rat> growths);

// Parses instance-file text: rationals separated by commas and/or
// newlines/whitespace, '#' starts a comment line.
BGTInstance parse_instance(std::string_view text);

std::string serialize_instance(const BGTInstance& inst);

// Divides every growth by h(1); returns the scaled instance together with
// the original h(1) as scale. Result has h(1) = 1 exactly.
std::pair<BGTInstance, Rat> normalize(const BGTInstance& inst);

}  // namespace bgt
