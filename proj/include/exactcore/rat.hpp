/**
 * @file rat.hpp
 * @brief Arbitrary-precision rational scalars.
 *
 * Rat is mpq_class with the usual canonical-form guarantee
 * (gcd(|num|, den) = 1, den > 0). Helpers here cover construction,
 * powers with negative exponents and text rendering.
 */
#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace exactcore {

using Rat = mpq_class;

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw DivisionByZero("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw DivisionByZero("rat_pow: 0 to negative power");
        return Rat(0);
    }
    Rat b = e < 0 ? Rat(1) / base : base;
    unsigned long n = e < 0 ? -(unsigned long)e : (unsigned long)e;
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace exactcore
