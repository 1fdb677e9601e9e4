#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "iterode/criteria.hpp"
#include "iterode/iterative.hpp"

#include "test_support.hpp"

using namespace iterode;
using testsupport::random_nonzero_rf;
using testsupport::random_rf;

namespace {

const Poly X = Poly::variable();

const RationalFunction zero;
const RationalFunction one{Rational(1)};

} // namespace

TEST_CASE("Laguerre-Lie condition on third-order equations") {
    const LinearODE canonical(3, {zero, zero, zero});
    const IterativityReport trivial = laguerre3(canonical);
    CHECK(trivial.order == 3);
    CHECK(trivial.method == CheckMethod::coefficient_condition);
    REQUIRE(trivial.residuals.size() == 1);
    CHECK(trivial.residuals[0].is_zero());
    CHECK(trivial.verdict);

    CHECK(laguerre3(generate_concrete(3, one, RationalFunction(X))).verdict);

    const IterativityReport airy = laguerre3(LinearODE(3, {RationalFunction(X), zero, zero}));
    CHECK_FALSE(airy.verdict);
    CHECK(airy.residuals[0] == RationalFunction(Poly(54) * X));

    CHECK_THROWS_AS(laguerre3(LinearODE(2, {zero, zero})), std::invalid_argument);
}

TEST_CASE("fourth-order coefficient conditions") {
    const IterativityReport trivial = criteria4(LinearODE(4, {zero, zero, zero, zero}));
    CHECK(trivial.verdict);
    REQUIRE(trivial.residuals.size() == 2);

    CHECK(criteria4(generate_concrete(4, one, RationalFunction(X))).verdict);

    const IterativityReport shifted = criteria4(LinearODE(4, {one, zero, zero, zero}));
    CHECK_FALSE(shifted.verdict);
    CHECK(shifted.residuals[0].is_zero());
    CHECK(shifted.residuals[1] == RationalFunction(1600));

    CHECK_THROWS_AS(criteria4(LinearODE(3, {zero, zero, zero})), std::invalid_argument);
}

TEST_CASE("normal-pattern cross-check") {
    // w''' + a w' + (a'/2) w with a = x^2.
    const IterativityReport cubic = normal_pattern_check(
        LinearODE(3, {RationalFunction(X), RationalFunction(X * X), zero}));
    CHECK(cubic.method == CheckMethod::normal_pattern);
    CHECK(cubic.verdict);

    // w'''' + a w'' + a' w' + (3/10 a'' + 9/100 a^2) w with a = x.
    const IterativityReport quartic = normal_pattern_check(LinearODE(
        4, {RationalFunction(make_rational(9, 100)) * RationalFunction(X * X), one,
            RationalFunction(X), zero}));
    CHECK(quartic.verdict);

    const IterativityReport bent =
        normal_pattern_check(LinearODE(4, {zero, zero, RationalFunction(X), zero}));
    CHECK_FALSE(bent.verdict);
    CHECK(bent.residuals[0] == -one);
    CHECK(bent.residuals[1] ==
          RationalFunction(make_rational(-9, 100)) * RationalFunction(X * X));

    CHECK_THROWS_AS(normal_pattern_check(LinearODE(2, {zero, zero})), std::invalid_argument);
}

TEST_CASE("generated equations always pass both checks") {
    std::mt19937 rng(314159);
    for (unsigned n = 3; n <= 4; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const RationalFunction r = random_nonzero_rf(rng), s = random_rf(rng);
            const LinearODE ode = generate_concrete(n, r, s);
            CHECK((n == 3 ? laguerre3(ode) : criteria4(ode)).verdict);
            CHECK(normal_pattern_check(ode).verdict);
        }
    }
}

TEST_CASE("perturbing one coefficient flips the verdict") {
    const LinearODE cubic = generate_concrete(3, one, RationalFunction(X));
    const LinearODE bumped0(
        3, {cubic.coefficient(0) + one, cubic.coefficient(1), cubic.coefficient(2)});
    const IterativityReport r0 = laguerre3(bumped0);
    CHECK_FALSE(r0.verdict);
    CHECK(r0.residuals[0] == RationalFunction(54));

    const LinearODE bumped1(
        3, {cubic.coefficient(0), cubic.coefficient(1) + one, cubic.coefficient(2)});
    CHECK(laguerre3(bumped1).residuals[0] == RationalFunction(Poly(-54) * X));

    const LinearODE quartic = generate_concrete(4, RationalFunction(X + Poly(1)), one);
    const LinearODE bumped(4, {quartic.coefficient(0) + one, quartic.coefficient(1),
                               quartic.coefficient(2), quartic.coefficient(3)});
    const IterativityReport r4 = criteria4(bumped);
    CHECK_FALSE(r4.verdict);
    CHECK(r4.residuals[0].is_zero());
    CHECK(r4.residuals[1] == RationalFunction(1600));
}

TEST_CASE("dispatch runs both methods and reports the coefficient conditions") {
    const LinearODE cubic = generate_concrete(3, RationalFunction(X), RationalFunction(X * X));
    const IterativityReport rep = is_iterative(cubic);
    CHECK(rep.verdict);
    CHECK(rep.method == CheckMethod::coefficient_condition);

    CHECK(is_iterative(generate_concrete(4, RationalFunction(X + Poly(1)), one)).verdict);
    CHECK_FALSE(is_iterative(LinearODE(3, {RationalFunction(X), zero, zero})).verdict);
    CHECK_FALSE(is_iterative(LinearODE(4, {one, zero, zero, zero})).verdict);

    CHECK_THROWS_AS(is_iterative(LinearODE(5, std::vector<RationalFunction>(5))),
                    std::invalid_argument);
    CHECK_THROWS_AS(is_iterative(LinearODE(2, {zero, zero})), std::invalid_argument);
}

TEST_CASE("methods agree on randomized equations") {
    std::mt19937 rng(662607);
    for (unsigned n = 3; n <= 4; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<RationalFunction> coeffs(n);
            for (auto& c : coeffs)
                c = random_rf(rng);
            const LinearODE ode(n, std::move(coeffs));
            const IterativityReport rep = is_iterative(ode); // throws on disagreement
            CHECK(rep.verdict == normal_pattern_check(ode).verdict);
        }
    }
}

TEST_CASE("the verdict is invariant under gauge reduction") {
    std::mt19937 rng(602214);
    for (unsigned n = 3; n <= 4; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<RationalFunction> coeffs(n);
            for (auto& c : coeffs)
                c = random_rf(rng);
            const LinearODE ode(n, std::move(coeffs));
            CHECK(is_iterative(ode).verdict == is_iterative(gauge_reduce(ode)).verdict);
        }
        const RationalFunction r = random_nonzero_rf(rng), s = random_rf(rng);
        CHECK(is_iterative(gauge_reduce(generate_concrete(n, r, s))).verdict);
    }
}
