#pragma once

#include <utility>
#include <vector>

#include "iterode/errors.hpp"
#include "iterode/linear_ode.hpp"
#include "iterode/rational.hpp"
#include "iterode/rational_function.hpp"

namespace iterode {

/// Derivatives of a gauge factor E with E'/E = gprime, divided by E:
/// h_0 = 1 and h_{m+1} = h_m' + gprime * h_m, so E^(m) = h_m * E.
/// E itself never appears; only gprime enters.
inline std::vector<RationalFunction> gauge_derivative_sequence(const RationalFunction& gprime,
                                                               unsigned count) {
    std::vector<RationalFunction> h;
    h.reserve(count + 1);
    h.emplace_back(Rational(1));
    for (unsigned m = 0; m < count; ++m)
        h.push_back(derivative(h.back()) + gprime * h.back());
    return h;
}

/// Substitutes y = w * E with E'/E = -c_{n-1}/n, which cancels the y^(n-1)
/// term: the coefficient of w^(i) is sum_{k >= i} c_k * C(k,i) * h_{k-i}
/// (with c_n = 1), and the common factor E divides out.  No integration is
/// performed; the result is monic of the same order.
inline LinearODE gauge_reduce(const LinearODE& ode) {
    const unsigned n = ode.order();
    const RationalFunction gprime =
        -ode.coefficient(n - 1) / RationalFunction(Rational(Int(n)));
    const auto h = gauge_derivative_sequence(gprime, n);
    const RationalFunction lead{Rational(1)};
    std::vector<RationalFunction> reduced(n);
    for (unsigned i = 0; i < n; ++i) {
        RationalFunction acc;
        for (unsigned k = i; k <= n; ++k) {
            const RationalFunction& ck = (k == n) ? lead : ode.coefficient(k);
            acc += RationalFunction(Rational(binomial(k, i))) * ck * h[k - i];
        }
        reduced[i] = std::move(acc);
    }
    if (!reduced[n - 1].is_zero())
        throw consistency_error("gauge reduction left a nonzero subleading coefficient");
    return LinearODE(n, std::move(reduced));
}

/// Order-3 equation whose gauge reduction is  w''' + a w' + (a'/2) w = 0,
/// reconstructed from the reduced datum a and the subleading coefficient c2:
///     c1 = a + c2' + c2^2/3,
///     54 c0 = 27 a' + 18 c2'' + 18 a c2 + 18 c2' c2 + 2 c2^3.
inline LinearODE standard_from_normal3(const RationalFunction& a, const RationalFunction& c2) {
    const RationalFunction ap = derivative(a);
    const RationalFunction c2p = derivative(c2), c2pp = derivative(c2p);
    const RationalFunction c1 = a + c2p + RationalFunction(make_rational(1, 3)) * c2 * c2;
    const RationalFunction c0 =
        RationalFunction(make_rational(1, 54)) *
        (RationalFunction(27) * ap + RationalFunction(18) * c2pp +
         RationalFunction(18) * a * c2 + RationalFunction(18) * c2p * c2 +
         RationalFunction(2) * c2 * c2 * c2);
    return LinearODE(3, {c0, c1, c2});
}

/// Order-4 equation whose gauge reduction is
///     w'''' + a w'' + a' w' + (3/10 a'' + 9/100 a^2) w = 0,
/// reconstructed from a and the subleading coefficient c3:
///     8 c2 = 8 a + 3 c3^2 + 12 c3',
///     c1 = a c3 / 2 + c3^3 / 16 + a' + 3 c3 c3' / 4 + c3'',
///     6400 c0 = 576 a^2 + 400 a (4 c3' + c3^2) + 80 (15 c3'^2 + 24 a'' + 20 c3''')
///             + 1600 (a' + c3'') c3 + 600 c3' c3^2 + 25 c3^4.
inline LinearODE standard_from_normal4(const RationalFunction& a, const RationalFunction& c3) {
    const RationalFunction ap = derivative(a), app = derivative(ap);
    const RationalFunction c3p = derivative(c3), c3pp = derivative(c3p),
                           c3ppp = derivative(c3pp);
    const RationalFunction c2 =
        RationalFunction(make_rational(1, 8)) *
        (RationalFunction(8) * a + RationalFunction(3) * c3 * c3 + RationalFunction(12) * c3p);
    const RationalFunction c1 =
        RationalFunction(make_rational(1, 2)) * a * c3 +
        RationalFunction(make_rational(1, 16)) * c3 * c3 * c3 + ap +
        RationalFunction(make_rational(3, 4)) * c3 * c3p + c3pp;
    const RationalFunction c0 =
        RationalFunction(make_rational(1, 6400)) *
        (RationalFunction(576) * a * a +
         RationalFunction(400) * a * (RationalFunction(4) * c3p + c3 * c3) +
         RationalFunction(80) * (RationalFunction(15) * c3p * c3p + RationalFunction(24) * app +
                                 RationalFunction(20) * c3ppp) +
         RationalFunction(1600) * (ap + c3pp) * c3 +
         RationalFunction(600) * c3p * c3 * c3 +
         RationalFunction(25) * c3 * c3 * c3 * c3);
    return LinearODE(4, {c0, c1, c2, c3});
}

} // namespace iterode
