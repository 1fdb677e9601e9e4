#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "iterode/errors.hpp"

namespace iterode {

using Int = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational scalar.  Always kept canonical:
/// gcd(|num|, den) = 1, den >= 1, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

/// num/den with the sign moved into the numerator.  The two-argument
/// cpp_rational constructor rejects negative denominators, so go through
/// an exact division instead.
inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0)
        throw division_by_zero("rational with zero denominator");
    Rational q(num);
    q /= Rational(den);
    return q;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Int result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i; // always exact: result is C(n-k+i, i)
    }
    return result;
}

inline std::string to_string(const Rational& q) {
    return q.str(); // "a" or "a/b"
}

} // namespace iterode
