#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace lipeq {

// Exact arithmetic substrate. No floating point anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign(const Int& x) { return x.sign(); }
inline int sign(const Rat& x) { return x.sign(); }

inline Int int_pow(Int base, unsigned long long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Parses "p/q", "p", or a plain decimal like "0.5" / "1e-9" is NOT accepted;
// decimals are converted exactly (0.25 -> 1/4).
Rat parse_rational(const std::string& s);

// "p/q" for non-integers, "p" otherwise.
std::string fraction_string(const Rat& r);

// Truncated decimal expansion with the given number of fractional digits.
std::string decimal_string(const Rat& r, int digits = 12);

}  // namespace lipeq
