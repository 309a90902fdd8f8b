#pragma once

#include <cstdint>
#include <string>

#include "bgt/instance.hpp"

namespace bgt {

// Tight family for the classic pinwheel bound: one unit
// bamboo plus n bamboos of growth 1/2 + eps (n even).
BGTInstance gen_tight_family(int n, const Rat& eps);

enum class Profile { Uniform, Dyadic, S2Heavy, SmallGrowth };

Profile profile_from_string(const std::string& s);
std::string to_string(Profile p);

// Deterministic seeded instance. All growths are exact rationals with
// small denominators so downstream simulations stay cheap.
//   uniform      n growths num/D, D small, normalized to h(1)=1
//   dyadic       n growths 1/2^k
//   s2-heavy     h(1)=1 plus growths mostly in (1/2, 2/3]
//   small-growth h(1)=1 plus growths in (1/50, 1/25], drawn until
//                sum h >= n * h(1) (count scales with the target n)
BGTInstance gen_random(int n, std::uint64_t seed, Profile profile);

}  // namespace bgt
