#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bgt {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational, backed by boost cpp_rational: always in lowest terms,
// denominator > 0. All algorithm arithmetic goes through this type; there
// is no floating-point fast path.
using Rat = boost::multiprecision::cpp_rational;

inline BigInt num(const Rat& r) { return numerator(r); }
inline BigInt den(const Rat& r) { return denominator(r); }

// Largest integer <= r.
inline BigInt floor_rat(const Rat& r) {
    BigInt q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

// Smallest integer >= r.
inline BigInt ceil_rat(const Rat& r) {
    return -floor_rat(-r);
}

struct RatParseError : std::runtime_error {
    explicit RatParseError(const std::string& tok)
        : std::runtime_error("unparsable rational token: '" + tok + "'") {}
};

// Accepts "3", "5/6" and exact decimals like "0.83" (-> 83/100).
// Decimals are expanded over powers of ten, never through binary floats.
Rat parse_rat(std::string_view token);

std::optional<Rat> try_parse_rat(std::string_view token);

// "num/den" (or just "num" when the value is integral).
std::string to_frac_string(const Rat& r);

// Fixed-point decimal approximation with the given number of digits,
// for report display only.
std::string to_decimal_string(const Rat& r, int digits = 6);

}  // namespace bgt
