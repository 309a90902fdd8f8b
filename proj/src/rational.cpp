#include "bgt/rational.hpp"

#include <cctype>

namespace bgt {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::optional<Rat> try_parse_rat(std::string_view token) {
    // strip surrounding whitespace
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    if (token.empty()) return std::nullopt;

    bool negative = false;
    if (token.front() == '+' || token.front() == '-') {
        negative = token.front() == '-';
        token.remove_prefix(1);
    }
    if (token.empty()) return std::nullopt;

    Rat value;
    if (auto slash = token.find('/'); slash != std::string_view::npos) {
        std::string_view n = token.substr(0, slash);
        std::string_view d = token.substr(slash + 1);
        if (!all_digits(n) || !all_digits(d)) return std::nullopt;
        BigInt dv{std::string(d)};
        if (dv == 0) return std::nullopt;
        value = Rat(BigInt{std::string(n)}, dv);
    } else if (auto dot = token.find('.'); dot != std::string_view::npos) {
        std::string_view ip = token.substr(0, dot);
        std::string_view fp = token.substr(dot + 1);
        if (ip.empty() && fp.empty()) return std::nullopt;
        if (!ip.empty() && !all_digits(ip)) return std::nullopt;
        if (!fp.empty() && !all_digits(fp)) return std::nullopt;
        BigInt intpart = ip.empty() ? BigInt{0} : BigInt{std::string(ip)};
        BigInt scale = 1;
        BigInt frac = 0;
        if (!fp.empty()) {
            frac = BigInt{std::string(fp)};
            for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
        }
        value = Rat(intpart * scale + frac, scale);
    } else {
        if (!all_digits(token)) return std::nullopt;
        value = Rat(BigInt{std::string(token)});
    }
    if (negative) value = -value;
    return value;
}

Rat parse_rat(std::string_view token) {
    auto v = try_parse_rat(token);
    if (!v) throw RatParseError(std::string(token));
    return *v;
}

std::string to_frac_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_decimal_string(const Rat& r, int digits) {
    BigInt n = numerator(r);
    BigInt d = denominator(r);
    bool neg = n < 0;
    if (neg) n = -n;
    BigInt ip = n / d;
    BigInt rem = n % d;
    std::string out = (neg ? "-" : "") + ip.str();
    if (digits > 0) {
        out += '.';
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            out += static_cast<char>('0' + static_cast<int>(rem / d));
            rem %= d;
        }
    }
    return out;
}

}  // namespace bgt
