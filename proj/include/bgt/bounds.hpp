#pragma once

#include "bgt/instance.hpp"

namespace bgt {

// Lower bound on the optimal elevation: max{2 h(1), sum h(j)} for n >= 2.
// For n = 1 a daily cut caps the height at h(1).
Rat lower_bound(const BGTInstance& inst);

}  // namespace bgt
