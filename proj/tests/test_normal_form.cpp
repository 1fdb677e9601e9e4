#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "iterode/iterative.hpp"
#include "iterode/normal_form.hpp"

#include "test_support.hpp"

using namespace iterode;
using testsupport::random_nonzero_rf;
using testsupport::random_rf;

namespace {

const Poly X = Poly::variable();

const RationalFunction zero;
const RationalFunction one{Rational(1)};

RationalFunction half_derivative(const RationalFunction& f) {
    return RationalFunction(make_rational(1, 2)) * derivative(f);
}

} // namespace

TEST_CASE("gauge derivative sequence against brute-force differentiation") {
    // E = (x^2+1)^3: h_m must equal E^(m)/E.
    const RationalFunction e(pow(X * X + Poly(1), 3));
    const RationalFunction gprime = derivative(e) / e;
    const auto h = gauge_derivative_sequence(gprime, 6);
    REQUIRE(h.size() == 7);
    RationalFunction ek = e;
    for (unsigned m = 0; m <= 6; ++m) {
        CHECK(h[m] == ek / e);
        ek = derivative(ek);
    }

    // Same with a pole: E = 1/(x-2).
    const RationalFunction ep(Poly(1), X - Poly(2));
    const auto hp = gauge_derivative_sequence(derivative(ep) / ep, 5);
    RationalFunction epk = ep;
    for (unsigned m = 0; m <= 5; ++m) {
        CHECK(hp[m] == epk / ep);
        epk = derivative(epk);
    }
}

TEST_CASE("gauge reduction removes the subleading term") {
    const LinearODE damped(2, {RationalFunction(X * X + Poly(1)), RationalFunction(Poly(2) * X)});
    CHECK(gauge_reduce(damped) == LinearODE(2, {zero, zero}));
    CHECK(gauge_reduce(damped).to_string() == "y'' = 0");

    const LinearODE cubic = generate_concrete(3, one, RationalFunction(X));
    CHECK(gauge_reduce(cubic) == LinearODE(3, {zero, zero, zero}));

    const LinearODE normal(3, {RationalFunction(X), RationalFunction(X * X), zero});
    CHECK(gauge_reduce(normal) == normal);
}

TEST_CASE("gauge reduction on randomized equations") {
    std::mt19937 rng(141421);
    for (unsigned n = 2; n <= 8; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<RationalFunction> coeffs(n);
            for (auto& c : coeffs)
                c = random_rf(rng);
            const LinearODE ode(n, std::move(coeffs));
            const LinearODE reduced = gauge_reduce(ode);
            CHECK(reduced.coefficient(n - 1).is_zero());
            CHECK(gauge_reduce(reduced) == reduced);
        }
    }
}

TEST_CASE("gauge reduction agrees with the symbolic normal form") {
    std::mt19937 rng(173205);
    for (unsigned n = 2; n <= 4; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            const RationalFunction r = random_nonzero_rf(rng), s = random_rf(rng);
            CHECK(gauge_reduce(generate_concrete(n, r, s)) == generate_normal_concrete(n, r));
        }
    }
}

TEST_CASE("order-3 reconstruction from normal-form data") {
    CHECK(standard_from_normal3(zero, zero) == LinearODE(3, {zero, zero, zero}));

    const RationalFunction a(X * X);
    CHECK(standard_from_normal3(a, zero) ==
          LinearODE(3, {RationalFunction(X), a, zero}));

    CHECK(standard_from_normal3(zero, RationalFunction(Poly(3) * X)) ==
          generate_concrete(3, one, RationalFunction(X)));

    std::mt19937 rng(223606);
    for (int trial = 0; trial < 6; ++trial) {
        const RationalFunction av = random_rf(rng), c2 = random_rf(rng);
        const LinearODE ode = standard_from_normal3(av, c2);
        CHECK(ode.coefficient(2) == c2);
        CHECK(gauge_reduce(ode) == LinearODE(3, {half_derivative(av), av, zero}));
    }
}

TEST_CASE("order-4 reconstruction from normal-form data") {
    CHECK(standard_from_normal4(zero, zero) == LinearODE(4, {zero, zero, zero, zero}));

    CHECK(standard_from_normal4(zero, RationalFunction(Poly(4) * X)) ==
          generate_concrete(4, one, RationalFunction(X)));

    const RationalFunction a(X);
    CHECK(standard_from_normal4(a, zero) ==
          LinearODE(4, {RationalFunction(make_rational(9, 100)) * a * a, one, a, zero}));

    std::mt19937 rng(244948);
    for (int trial = 0; trial < 6; ++trial) {
        const RationalFunction av = random_rf(rng), c3 = random_rf(rng);
        const LinearODE ode = standard_from_normal4(av, c3);
        const RationalFunction q0 =
            RationalFunction(make_rational(3, 10)) * derivative(derivative(av)) +
            RationalFunction(make_rational(9, 100)) * av * av;
        CHECK(ode.coefficient(3) == c3);
        CHECK(gauge_reduce(ode) == LinearODE(4, {q0, derivative(av), av, zero}));
    }
}
