#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ehrlab {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Decimal rendering without a +, exact: "5", "-7", "10/3".
inline std::string to_decimal_string(const Rational& r) {
    const BigInt num = numerator(r), den = denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

/// C(n, r) for nonnegative integer arguments; 0 when r > n.
inline BigInt binomial(unsigned n, unsigned r) {
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    BigInt v = 1;
    for (unsigned i = 0; i < r; ++i) {
        v *= n - i;
        v /= i + 1;  // exact: i+1 consecutive factors are divisible by (i+1)!
    }
    return v;
}

/// C(x, d) extended to rational x via the falling factorial
/// x(x-1)...(x-d+1)/d!, the degree-d polynomial agreeing with the binomial
/// coefficient at integer arguments.
inline Rational falling_binomial(const Rational& x, unsigned d) {
    Rational num = 1;
    for (unsigned t = 0; t < d; ++t) num *= x - static_cast<int>(t);
    return num / Rational(factorial(d));
}

inline BigInt ipow(BigInt base, unsigned exp) {
    BigInt r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

}  // namespace ehrlab
