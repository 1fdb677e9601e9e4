// Prints the symbolic coefficient table of the third iterate along every
// computation route, then the unit-source row and the first few normal-form
// coefficients, all as exact differential polynomials in r and s.

#include <iostream>

#include "iterode/iterative.hpp"

using namespace iterode;

int main() {
    const unsigned n = 3;
    const CoefficientTable table(n);

    std::cout << "coefficients of y^(3-j) in the third iterate of r*y' + s*y:\n";
    for (unsigned j = 0; j <= n; ++j)
        std::cout << "  K[3][" << j << "] = " << table.entries(n, static_cast<int>(j)).to_string()
                  << "\n";

    std::cout << "\nthe three other routes reproduce row 3 exactly:\n";
    for (unsigned j = 1; j <= n; ++j) {
        const JetPoly reference = table.entries(n, static_cast<int>(j));
        const bool same = coeffs_algorithmic(n, j) == reference &&
                          coeffs_closed_form(n, j) == reference &&
                          coeffs_simplified(n, j) == reference;
        const Int count = term_count(n, j);
        std::cout << "  j = " << j << ": " << (same ? "agree" : "DISAGREE") << " (" << count.str()
                  << " closed-form term" << (count == 1 ? "" : "s") << ")\n";
    }

    std::cout << "\nwith r = 1 the row collapses to binomial multiples of iterated s:\n";
    const auto unit = coeffs_unit_r(n);
    for (unsigned j = 0; j <= n; ++j)
        std::cout << "  " << unit[j].to_string() << "\n";

    std::cout << "\nnormal-form coefficients, written over powers of r:\n";
    for (unsigned order = 2; order <= 5; ++order) {
        const auto normal = normal_coeffs(order);
        std::cout << "  A[" << order << "][2] = " << normal[0].to_string() << "\n";
    }
    std::cout << "(each is the binomial C(n+1,3) times the same invariant of r)\n";
    return 0;
}
