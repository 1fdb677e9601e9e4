#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iterode/errors.hpp"
#include "iterode/rational.hpp"

namespace iterode {

/// Cap on the degree of any computed polynomial.  Pathological inputs (deeply
/// nested powers, huge orders) trip a resource_limit_error instead of eating
/// unbounded memory.
inline std::size_t poly_degree_cap = 512;

inline void set_poly_degree_cap(std::size_t cap) { poly_degree_cap = cap; }

/// Univariate polynomial in x over exact rationals.  Coefficients are stored
/// by ascending degree with no trailing zeros; the zero polynomial stores
/// nothing and reports an empty degree.
class Poly {
public:
    Poly() = default;

    Poly(const Rational& constant) { // NOLINT: implicit by design
        if (constant != 0)
            coeffs_.push_back(constant);
    }

    Poly(int constant) : Poly(Rational(constant)) {} // NOLINT

    explicit Poly(std::vector<Rational> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
        trim();
    }

    static Poly variable() { return Poly(std::vector<Rational>{0, 1}); }

    /// c * x^k
    static Poly term(const Rational& c, std::size_t k) {
        if (c == 0)
            return {};
        check_degree(k);
        std::vector<Rational> v(k + 1, Rational(0));
        v[k] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree in x; empty for the zero polynomial (no -1 sentinel arithmetic).
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty())
            return std::nullopt;
        return coeffs_.size() - 1;
    }

    const Rational& coeff(std::size_t k) const {
        static const Rational zero(0);
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }

    const Rational& leading() const {
        if (coeffs_.empty())
            throw std::invalid_argument("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    bool is_constant() const { return coeffs_.size() <= 1; }

    Poly operator-() const {
        Poly out = *this;
        for (auto& c : out.coeffs_)
            c = -c;
        return out;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            v[i] += b.coeffs_[i];
        return Poly(std::move(v));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        check_degree(a.coeffs_.size() - 1 + b.coeffs_.size() - 1);
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(v));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// Quotient and remainder of exact field division.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero())
            throw division_by_zero("polynomial division by zero");
        Poly rem = a;
        std::vector<Rational> q;
        const std::size_t db = b.coeffs_.size() - 1;
        while (!rem.is_zero() && rem.coeffs_.size() - 1 >= db) {
            const std::size_t shift = rem.coeffs_.size() - 1 - db;
            const Rational factor = rem.leading() / b.leading();
            if (q.size() < shift + 1)
                q.resize(shift + 1, Rational(0));
            q[shift] += factor;
            rem -= Poly::term(factor, shift) * b;
        }
        return {Poly(std::move(q)), rem};
    }

    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    Poly monic() const {
        if (is_zero())
            return {};
        Poly out = *this;
        const Rational lc = out.leading();
        for (auto& c : out.coeffs_)
            c /= lc;
        return out;
    }

    bool operator==(const Poly&) const = default;

    std::string to_string() const {
        if (is_zero())
            return "0";
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Rational& c = coeffs_[i];
            if (c == 0)
                continue;
            const bool first = out.empty();
            const bool negative = c < 0;
            if (first)
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            const Rational mag = negative ? Rational(-c) : c;
            if (i == 0) {
                out += iterode::to_string(mag);
            } else {
                if (mag != 1)
                    out += iterode::to_string(mag) + "*";
                out += "x";
                if (i > 1)
                    out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    std::vector<Rational> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    static void check_degree(std::size_t d) {
        if (d > poly_degree_cap)
            throw resource_limit_error("polynomial degree " + std::to_string(d) +
                                       " exceeds cap " + std::to_string(poly_degree_cap));
    }
};

inline Poly derivative(const Poly& p) {
    const auto d = p.degree();
    if (!d || *d == 0)
        return {};
    std::vector<Rational> v(*d, Rational(0));
    for (std::size_t k = 1; k <= *d; ++k)
        v[k - 1] = p.coeff(k) * Rational(Int(k));
    return Poly(std::move(v));
}

inline Poly pow(const Poly& base, unsigned exponent) {
    Poly out(1);
    for (unsigned i = 0; i < exponent; ++i)
        out *= base;
    return out;
}

/// Monic gcd via Euclid; gcd(0, 0) = 0.  Each remainder is renormalized to
/// monic, which keeps the rational coefficients from snowballing along the
/// remainder sequence.
inline Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = (x % y).monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

} // namespace iterode
