#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "iterode/errors.hpp"
#include "iterode/linear_ode.hpp"
#include "iterode/normal_form.hpp"
#include "iterode/rational.hpp"
#include "iterode/rational_function.hpp"

namespace iterode {

enum class CheckMethod { coefficient_condition, normal_pattern };

inline std::string to_string(CheckMethod method) {
    return method == CheckMethod::coefficient_condition ? "coefficient-condition"
                                                        : "normal-pattern";
}

/// Outcome of an iterativity check: the exact residuals of the characterizing
/// relations and the verdict they imply.
struct IterativityReport {
    unsigned order;
    std::vector<RationalFunction> residuals;
    bool verdict; // true iff every residual is the zero function
    CheckMethod method;
};

inline IterativityReport make_report(unsigned order, std::vector<RationalFunction> residuals,
                                     CheckMethod method) {
    bool ok = true;
    for (const auto& res : residuals)
        ok = ok && res.is_zero();
    return {order, std::move(residuals), ok, method};
}

/// Third-order condition of Laguerre and Lie: the equation is iterative iff
///     54 c0 - 18 c1 c2 + 4 c2^3 - 27 c1' + 18 c2 c2' + 9 c2'' = 0.
inline IterativityReport laguerre3(const LinearODE& ode) {
    if (ode.order() != 3)
        throw std::invalid_argument("the Laguerre-Lie condition applies to order 3 only");
    const RationalFunction& c0 = ode.coefficient(0);
    const RationalFunction& c1 = ode.coefficient(1);
    const RationalFunction& c2 = ode.coefficient(2);
    RationalFunction residual = RationalFunction(54) * c0 - RationalFunction(18) * c1 * c2 +
                                RationalFunction(4) * c2 * c2 * c2 -
                                RationalFunction(27) * derivative(c1) +
                                RationalFunction(18) * c2 * derivative(c2) +
                                RationalFunction(9) * derivative(derivative(c2));
    return make_report(3, {std::move(residual)}, CheckMethod::coefficient_condition);
}

/// Fourth-order system: the equation is iterative iff both residuals vanish,
///     4 c2 c3 - c3^3 + 8 c2' - 6 c3 c3' - 4 c3'' - 8 c1 = 0,
///     1600 c0 - 144 c2^2 + 11 c3^4 - 400 c3 c2' + 288 c3^2 c3' + 336 c3'^2
///         + 8 c2 (c3^2 + 4 c3') - 480 c2'' + 560 c3 c3'' + 320 c3''' = 0.
inline IterativityReport criteria4(const LinearODE& ode) {
    if (ode.order() != 4)
        throw std::invalid_argument("the fourth-order conditions apply to order 4 only");
    const RationalFunction& c0 = ode.coefficient(0);
    const RationalFunction& c1 = ode.coefficient(1);
    const RationalFunction& c2 = ode.coefficient(2);
    const RationalFunction& c3 = ode.coefficient(3);
    const RationalFunction c2p = derivative(c2), c2pp = derivative(c2p);
    const RationalFunction c3p = derivative(c3), c3pp = derivative(c3p),
                           c3ppp = derivative(c3pp);
    RationalFunction first = RationalFunction(4) * c2 * c3 - c3 * c3 * c3 +
                             RationalFunction(8) * c2p - RationalFunction(6) * c3 * c3p -
                             RationalFunction(4) * c3pp - RationalFunction(8) * c1;
    RationalFunction second =
        RationalFunction(1600) * c0 - RationalFunction(144) * c2 * c2 +
        RationalFunction(11) * c3 * c3 * c3 * c3 - RationalFunction(400) * c3 * c2p +
        RationalFunction(288) * c3 * c3 * c3p + RationalFunction(336) * c3p * c3p +
        RationalFunction(8) * c2 * (c3 * c3 + RationalFunction(4) * c3p) -
        RationalFunction(480) * c2pp + RationalFunction(560) * c3 * c3pp +
        RationalFunction(320) * c3ppp;
    return make_report(4, {std::move(first), std::move(second)},
                       CheckMethod::coefficient_condition);
}

/// Independent cross-check: gauge-reduce and compare the reduced coefficients
/// Q against the shape every iterative equation must take,
///     order 3:  w''' + Q1 w' + (Q1'/2) w,
///     order 4:  w'''' + Q2 w'' + Q2' w' + (3/10 Q2'' + 9/100 Q2^2) w.
inline IterativityReport normal_pattern_check(const LinearODE& ode) {
    const unsigned n = ode.order();
    if (n != 3 && n != 4)
        throw std::invalid_argument("normal-pattern check supports orders 3 and 4 only");
    const LinearODE reduced = gauge_reduce(ode);
    if (n == 3) {
        RationalFunction residual =
            reduced.coefficient(0) -
            RationalFunction(make_rational(1, 2)) * derivative(reduced.coefficient(1));
        return make_report(3, {std::move(residual)}, CheckMethod::normal_pattern);
    }
    const RationalFunction& q2 = reduced.coefficient(2);
    RationalFunction first = reduced.coefficient(1) - derivative(q2);
    RationalFunction second = reduced.coefficient(0) -
                              RationalFunction(make_rational(3, 10)) * derivative(derivative(q2)) -
                              RationalFunction(make_rational(9, 100)) * q2 * q2;
    return make_report(4, {std::move(first), std::move(second)}, CheckMethod::normal_pattern);
}

/// Decides iterativity from the coefficients alone, running both methods and
/// insisting that they agree; the coefficient-condition report is returned.
inline IterativityReport is_iterative(const LinearODE& ode) {
    const unsigned n = ode.order();
    if (n != 3 && n != 4)
        throw std::invalid_argument("iterativity is characterized for orders 3 and 4 only");
    IterativityReport conditions = n == 3 ? laguerre3(ode) : criteria4(ode);
    if (conditions.verdict != normal_pattern_check(ode).verdict)
        throw consistency_error("coefficient conditions and normal pattern disagree");
    return conditions;
}

} // namespace iterode
