#include "bgt/generators.hpp"

#include <random>
#include <stdexcept>

namespace bgt {

BGTInstance gen_tight_family(int n, const Rat& eps) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("gen_tight_family: n must be even and >= 2");
    if (eps <= 0 || eps >= Rat(1, 2)) throw std::invalid_argument("gen_tight_family: eps must be in (0, 1/2)");
    std::vector<Rat> growths;
    growths.reserve(static_cast<size_t>(n) + 1);
    growths.push_back(1);
    Rat g = Rat(1, 2) + eps;
    for (int i = 0; i < n; ++i) growths.push_back(g);
    return make_instance(std::move(growths));
}

Profile profile_from_string(const std::string& s) {
    if (s == "uniform") return Profile::Uniform;
    if (s == "dyadic") return Profile::Dyadic;
    if (s == "s2-heavy") return Profile::S2Heavy;
    if (s == "small-growth") return Profile::SmallGrowth;
    throw std::invalid_argument("unknown generator profile: " + s);
}

std::string to_string(Profile p) {
    switch (p) {
        case Profile::Uniform: return "uniform";
        case Profile::Dyadic: return "dyadic";
        case Profile::S2Heavy: return "s2-heavy";
        case Profile::SmallGrowth: return "small-growth";
    }
    return "?";
}

BGTInstance gen_random(int n, std::uint64_t seed, Profile profile) {
    if (n < 1) throw std::invalid_argument("gen_random: n must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Rat> growths;

    switch (profile) {
        case Profile::Uniform: {
            static const long dens[] = {24, 48, 60, 64, 100, 120};
            long d = dens[rng() % std::size(dens)];
            for (int i = 0; i < n; ++i) {
                long num = static_cast<long>(rng() % static_cast<std::uint64_t>(d)) + 1;
                growths.emplace_back(num, d);
            }
            break;
        }
        case Profile::Dyadic: {
            for (int i = 0; i < n; ++i) growths.emplace_back(1, 1L << (rng() % 7));
            break;
        }
        case Profile::S2Heavy: {
            growths.emplace_back(1);
            const long d = 120;
            for (int i = 1; i < n; ++i) {
                if (rng() % 10 < 8) {
                    // numerators in (60, 80], i.e. growths in (1/2, 2/3]
                    growths.emplace_back(61 + static_cast<long>(rng() % 20), d);
                } else {
                    growths.emplace_back(static_cast<long>(rng() % d) + 1, d);
                }
            }
            break;
        }
        case Profile::SmallGrowth: {
            growths.emplace_back(1);
            const long d = 600;
            Rat sum = 1;
            Rat target = Rat(n);
            // growths in (1/50, 1/25]: numerators 13..24 over 600
            while (sum < target) {
                Rat g(13 + static_cast<long>(rng() % 12), d);
                sum += g;
                growths.push_back(std::move(g));
            }
            break;
        }
    }

    BGTInstance inst = make_instance(std::move(growths));
    if (!inst.normalized()) inst = normalize(inst).first;
    return inst;
}

}  // namespace bgt
