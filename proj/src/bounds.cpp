#include "bgt/bounds.hpp"

#include <algorithm>

namespace bgt {

Rat lower_bound(const BGTInstance& inst) {
    if (inst.n() == 1) return inst.h(0);
    return std::max(Rat(2) * inst.h(0), inst.sum());
}

}  // namespace bgt
