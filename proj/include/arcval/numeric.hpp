#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "arcval/errors.hpp"

namespace arcval {

// Arbitrary precision throughout: pairings, determinants and pullback
// coefficients overflow machine words on legitimate inputs.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Parses "p/q" or "n" as an exact rational. Rejects empty strings,
/// malformed digits and zero denominators.
inline Rational parse_rational(const std::string& text) {
    auto parse_int = [](const std::string& s) -> Integer {
        if (s.empty()) throw InputError("empty integer literal");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw InputError("sign without digits: '" + s + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw InputError("malformed integer literal: '" + s + "'");
        return Integer(s);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + text + "'");
    return Rational(num, den);
}

/// Canonical form: "n" for integers, "p/q" otherwise (q > 0, reduced).
inline std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Deterministic 64-bit generator (splitmix64). Used wherever the spec of an
/// operation includes a seed, so identical seeds give identical results on
/// every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [lo, hi], both ends included.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

private:
    std::uint64_t state_;
};

} // namespace arcval
