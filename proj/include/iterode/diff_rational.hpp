#pragma once

// Fractions of jet polynomials whose denominator is a power of r.  This class
// is closed under d/dx because d(P/r^k) = (P'r - kPr')/r^(k+1); no wider
// differential-fraction arithmetic is needed.

#include <string>
#include <utility>

#include "iterode/jet.hpp"

namespace iterode {

class DiffRational {
public:
    DiffRational() = default;

    DiffRational(JetPoly numerator, unsigned r_power)
        : num_(std::move(numerator)), rpow_(r_power) {
        reduce();
    }

    DiffRational(const JetPoly& numerator) : DiffRational(numerator, 0) {} // NOLINT
    DiffRational(const Rational& constant) : DiffRational(JetPoly(constant), 0) {} // NOLINT
    DiffRational(int constant) : DiffRational(JetPoly(constant), 0) {}     // NOLINT

    const JetPoly& num() const { return num_; }
    unsigned rpow() const { return rpow_; }

    bool is_zero() const { return num_.is_zero(); }

    DiffRational operator-() const { return DiffRational(-num_, rpow_); }

    friend DiffRational operator+(const DiffRational& a, const DiffRational& b) {
        const unsigned m = std::max(a.rpow_, b.rpow_);
        const JetPoly r = JetPoly::var("r");
        return DiffRational(a.num_ * pow(r, m - a.rpow_) + b.num_ * pow(r, m - b.rpow_), m);
    }

    friend DiffRational operator-(const DiffRational& a, const DiffRational& b) {
        return a + (-b);
    }

    friend DiffRational operator*(const DiffRational& a, const DiffRational& b) {
        return DiffRational(a.num_ * b.num_, a.rpow_ + b.rpow_);
    }

    DiffRational& operator+=(const DiffRational& o) { return *this = *this + o; }
    DiffRational& operator-=(const DiffRational& o) { return *this = *this - o; }
    DiffRational& operator*=(const DiffRational& o) { return *this = *this * o; }

    // Both sides fully reduced, so representation equality is value equality.
    bool operator==(const DiffRational&) const = default;

    std::string to_string() const {
        Int common_den = 1;
        for (const auto& [m, c] : num_.terms())
            common_den = lcm(common_den, denominator(c));
        if (rpow_ == 0 && common_den == 1)
            return num_.to_string();
        const JetPoly scaled = JetPoly(Rational(common_den)) * num_;
        std::string den;
        const std::string rpart = rpow_ == 1 ? "r" : "r^" + std::to_string(rpow_);
        if (common_den == 1)
            den = rpart;
        else if (rpow_ == 0)
            den = common_den.str();
        else
            den = "(" + common_den.str() + "*" + rpart + ")";
        return "(" + scaled.to_string() + ")/" + den;
    }

private:
    JetPoly num_;
    unsigned rpow_ = 0;

    void reduce() {
        if (num_.is_zero()) {
            rpow_ = 0;
            return;
        }
        const JetVar r("r", 0);
        while (rpow_ > 0 && num_.divisible_by(r)) {
            num_ = num_.divided_by(r);
            --rpow_;
        }
    }
};

inline DiffRational derivative(const DiffRational& f) {
    const JetPoly r = JetPoly::var("r");
    const JetPoly r1 = JetPoly::var("r", 1);
    return DiffRational(derivative(f.num()) * r - JetPoly(Rational(Int(f.rpow()))) * f.num() * r1,
                        f.rpow() + 1);
}

inline DiffRational pow(const DiffRational& base, unsigned exponent) {
    DiffRational out(1);
    for (unsigned i = 0; i < exponent; ++i)
        out *= base;
    return out;
}

/// Evaluate at a concrete nonzero r(x).
inline RationalFunction substitute(const DiffRational& f, const RationalFunction& r_value) {
    if (r_value.is_zero())
        throw division_by_zero("substituting r = 0 into a fraction over a power of r");
    return substitute(f.num(), {{"r", r_value}}) / pow(r_value, f.rpow());
}

} // namespace iterode
