#pragma once

#include <map>
#include <ostream>
#include <string>

#include "iterode/criteria.hpp"
#include "iterode/errors.hpp"
#include "iterode/iterative.hpp"
#include "iterode/normal_form.hpp"

namespace iterode {

/// Cross-validates the independent computation routes against one another,
/// printing one [ok] line per completed block.  Any disagreement throws
/// consistency_error: that always indicates a defect in the library.
inline void run_selftest(unsigned max_order, std::ostream& out) {
    const auto require = [](bool ok, const std::string& what) {
        if (!ok)
            throw consistency_error("selftest failed: " + what);
    };
    const auto at = [](unsigned n, unsigned j) {
        return "(" + std::to_string(n) + ", " + std::to_string(j) + ")";
    };

    for (unsigned n = 1; n <= max_order; ++n) {
        const CoefficientTable table(n);
        for (unsigned j = 1; j <= n; ++j) {
            const JetPoly& expected = table.entries(n, static_cast<int>(j));
            require(coeffs_algorithmic(n, j) == expected, "algorithmic sum at " + at(n, j));
            require(coeffs_closed_form(n, j) == expected, "closed form at " + at(n, j));
            require(coeffs_simplified(n, j) == expected, "simplified form at " + at(n, j));
        }
        out << "[ok] coefficient routes agree at order " << n << "\n";
    }

    const unsigned unit_limit = max_order + 3;
    for (unsigned n = 1; n <= unit_limit; ++n) {
        const CoefficientTable table(n);
        const auto unit = coeffs_unit_r(n);
        for (unsigned j = 0; j <= n; ++j)
            require(specialize_unit_r(table.entries(n, static_cast<int>(j))) == unit[j],
                    "unit-source specialization at " + at(n, j));
    }
    out << "[ok] unit-source specialization up to order " << unit_limit << "\n";

    for (unsigned n = 0; n <= 12; ++n)
        for (unsigned j = 0; j <= n; ++j)
            require(term_count(n, j) == binomial(n, j), "term count at " + at(n, j));
    out << "[ok] multi-sum term counts match binomials up to order 12\n";

    const DiffRational invariant(JetPoly(make_rational(1, 4)) * JetPoly::var("r", 1) *
                                         JetPoly::var("r", 1) -
                                     JetPoly(make_rational(1, 2)) * JetPoly::var("r") *
                                         JetPoly::var("r", 2),
                                 2);
    const unsigned normal_limit = max_order + 1;
    for (unsigned n = 2; n <= normal_limit; ++n) {
        const auto normal = normal_coeffs(n); // asserts that K[n][1] is annihilated
        require(normal[0] == DiffRational(JetPoly(Rational(binomial(n + 1, 3)))) * invariant,
                "leading normal coefficient at order " + std::to_string(n));
    }
    out << "[ok] normal-form coefficients follow the invariant of r up to order " << normal_limit
        << "\n";

    const RationalFunction x(Poly::variable());
    const RationalFunction rval = x;
    const RationalFunction sval = x * x + RationalFunction(1);
    const std::map<std::string, RationalFunction> bind{{"r", rval}, {"s", sval}};
    const unsigned concrete_limit = max_order < 5 ? max_order : 5;
    for (unsigned n = 1; n <= concrete_limit; ++n) {
        const CoefficientTable table(n);
        const LinearODE ode = generate_concrete(n, rval, sval);
        const RationalFunction lead = pow(rval, n);
        for (unsigned j = 0; j < n; ++j)
            require(ode.coefficient(j) ==
                        substitute(table.entries(n, static_cast<int>(n - j)), bind) / lead,
                    "concrete coefficient at " + at(n, j));
    }
    out << "[ok] concrete generation matches the substituted table up to order " << concrete_limit
        << "\n";

    for (unsigned n = 2; n <= 4; ++n)
        require(gauge_reduce(generate_concrete(n, rval, sval)) ==
                    generate_normal_concrete(n, rval),
                "gauge reduction at order " + std::to_string(n));
    require(is_iterative(generate_concrete(3, rval, sval)).verdict,
            "iterativity of a generated order-3 equation");
    require(is_iterative(generate_concrete(4, rval, sval)).verdict,
            "iterativity of a generated order-4 equation");
    out << "[ok] gauge reduction and iterativity checks accept generated equations\n";
}

} // namespace iterode
