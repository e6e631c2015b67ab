// Exact rational scalar used throughout: arbitrary-precision numerator and
// denominator, always stored normalized (gcd 1, positive denominator).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace abelsign {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& r) {
    return r.sign();
}

inline Rational rat_abs(const Rational& r) {
    return r < 0 ? Rational(-r) : r;
}

inline Rational rat_pow(const Rational& base, unsigned e) {
    Rational acc(1), b = base;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline std::string rat_str(const Rational& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    std::string s = num.str();
    if (den != 1) {
        s += '/';
        s += den.str();
    }
    return s;
}

inline double rat_to_double(const Rational& r) {
    return r.convert_to<double>();
}

// Splits n = s^2 * f with f square-free; returns (s, f). Trial division up
// to 10^5 plus a perfect-square test on the cofactor; any cofactor below
// 10^15 that survives both is square-free.
inline std::pair<Int, Int> split_square_part(Int n) {
    Int s = 1, f = 1;
    if (n <= 0) return {Int(0), Int(0)};
    for (Int p = 2; p <= 100000 && p * p <= n; p = (p == 2 ? Int(3) : p + 2)) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2) f *= p;
    }
    const Int root = boost::multiprecision::sqrt(n);
    if (root * root == n) {
        s *= root;
    } else {
        f *= n;
    }
    return {s, f};
}

}  // namespace abelsign
