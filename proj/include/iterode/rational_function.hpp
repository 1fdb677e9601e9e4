#pragma once

#include <string>
#include <utility>

#include "iterode/errors.hpp"
#include "iterode/poly.hpp"

namespace iterode {

/// Quotient of polynomials in x, always held in canonical form: numerator and
/// denominator coprime, denominator monic, zero represented as 0/1.  Equal
/// functions therefore have identical representations and operator== decides
/// exact equality.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}

    RationalFunction(const Rational& constant) : num_(constant), den_(1) {} // NOLINT
    RationalFunction(int constant) : num_(constant), den_(1) {}             // NOLINT
    RationalFunction(Poly numerator) : num_(std::move(numerator)), den_(1) {} // NOLINT

    RationalFunction(Poly numerator, Poly denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        normalize();
    }

    static RationalFunction variable() { return RationalFunction(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == Poly(1); }

    RationalFunction operator-() const {
        RationalFunction out = *this;
        out.num_ = -out.num_;
        return out;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero())
            throw division_by_zero("division by the zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    bool operator==(const RationalFunction&) const = default;

    std::string to_string() const {
        if (is_polynomial())
            return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    Poly num_, den_;

    void normalize() {
        if (den_.is_zero())
            throw division_by_zero("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        const Poly g = gcd(num_, den_);
        num_ = num_ / g;
        den_ = den_ / g;
        const Rational lc = den_.leading();
        num_ = num_ * Poly(Rational(1) / lc);
        den_ = den_ * Poly(Rational(1) / lc);
    }
};

/// Quotient rule; the result is canonical.
inline RationalFunction derivative(const RationalFunction& f) {
    return RationalFunction(derivative(f.num()) * f.den() - f.num() * derivative(f.den()),
                            f.den() * f.den());
}

inline RationalFunction pow(const RationalFunction& base, unsigned exponent) {
    RationalFunction out(1);
    for (unsigned i = 0; i < exponent; ++i)
        out *= base;
    return out;
}

} // namespace iterode
