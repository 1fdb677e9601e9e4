#pragma once

// Differential polynomials over jet variables.  A jet variable is a formal
// symbol for the k-th derivative of a named function (r'', s', ...); a
// JetPoly is a polynomial in such symbols with exact rational coefficients,
// closed under the total derivative d/dx.

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iterode/errors.hpp"
#include "iterode/rational.hpp"
#include "iterode/rational_function.hpp"

namespace iterode {

/// The closed symbol alphabet: r, s, g (gauge exponent), a, y, and the
/// concrete-coefficient names c0, c1, ...  Anything else is a typo.
inline bool is_registered_jet_symbol(std::string_view symbol) {
    if (symbol == "r" || symbol == "s" || symbol == "g" || symbol == "a" || symbol == "y")
        return true;
    if (symbol.size() >= 2 && symbol[0] == 'c')
        return std::all_of(symbol.begin() + 1, symbol.end(),
                           [](unsigned char ch) { return std::isdigit(ch) != 0; });
    return false;
}

struct JetVar {
    std::string symbol;
    unsigned order = 0; // number of primes

    JetVar(std::string sym, unsigned ord) : symbol(std::move(sym)), order(ord) {
        if (!is_registered_jet_symbol(symbol))
            throw std::invalid_argument("unregistered jet symbol: " + symbol);
    }

    auto operator<=>(const JetVar&) const = default;

    std::string to_string() const { return symbol + std::string(order, '\''); }
};

/// Product of jet variables with positive exponents, kept sorted by
/// (symbol, order).  The empty product is the constant 1.
class JetMonomial {
public:
    JetMonomial() = default;

    explicit JetMonomial(const JetVar& v, unsigned exponent = 1) {
        if (exponent > 0)
            factors_.emplace_back(v, exponent);
    }

    const std::vector<std::pair<JetVar, unsigned>>& factors() const { return factors_; }

    bool is_unit() const { return factors_.empty(); }

    unsigned exponent_of(const JetVar& v) const {
        for (const auto& [var, exp] : factors_)
            if (var == v)
                return exp;
        return 0;
    }

    JetMonomial times(const JetMonomial& other) const {
        JetMonomial out;
        auto a = factors_.begin(), b = other.factors_.begin();
        while (a != factors_.end() || b != other.factors_.end()) {
            if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first))
                out.factors_.push_back(*a++);
            else if (a == factors_.end() || b->first < a->first)
                out.factors_.push_back(*b++);
            else {
                out.factors_.emplace_back(a->first, a->second + b->second);
                ++a, ++b;
            }
        }
        return out;
    }

    /// Divide by v once; pre: exponent_of(v) > 0.
    JetMonomial divided_by_var(const JetVar& v) const {
        JetMonomial out;
        for (const auto& [var, exp] : factors_) {
            if (var == v) {
                if (exp > 1)
                    out.factors_.emplace_back(var, exp - 1);
            } else {
                out.factors_.emplace_back(var, exp);
            }
        }
        return out;
    }

    // Lexicographic by (symbol, order), then by exponent.
    auto operator<=>(const JetMonomial&) const = default;

    std::string to_string() const {
        std::string out;
        for (const auto& [var, exp] : factors_) {
            if (!out.empty())
                out += "*";
            out += var.to_string();
            if (exp > 1)
                out += "^" + std::to_string(exp);
        }
        return out;
    }

private:
    std::vector<std::pair<JetVar, unsigned>> factors_;
};

/// Polynomial over jet variables.  Terms map canonical monomials to nonzero
/// rational coefficients; rendering and equality are therefore stable.
class JetPoly {
public:
    JetPoly() = default;
    JetPoly(const Rational& constant) { add_term(JetMonomial(), constant); } // NOLINT
    JetPoly(int constant) : JetPoly(Rational(constant)) {}                   // NOLINT

    static JetPoly var(const std::string& symbol, unsigned order = 0) {
        JetPoly p;
        p.add_term(JetMonomial(JetVar(symbol, order)), 1);
        return p;
    }

    static JetPoly monomial(const JetMonomial& m, const Rational& c) {
        JetPoly p;
        p.add_term(m, c);
        return p;
    }

    const std::map<JetMonomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    void add_term(const JetMonomial& m, const Rational& c) {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    JetPoly operator-() const {
        JetPoly out = *this;
        for (auto& [m, c] : out.terms_)
            c = -c;
        return out;
    }

    friend JetPoly operator+(const JetPoly& a, const JetPoly& b) {
        JetPoly out = a;
        for (const auto& [m, c] : b.terms_)
            out.add_term(m, c);
        return out;
    }

    friend JetPoly operator-(const JetPoly& a, const JetPoly& b) { return a + (-b); }

    friend JetPoly operator*(const JetPoly& a, const JetPoly& b) {
        JetPoly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                out.add_term(ma.times(mb), ca * cb);
        return out;
    }

    JetPoly& operator+=(const JetPoly& o) { return *this = *this + o; }
    JetPoly& operator-=(const JetPoly& o) { return *this = *this - o; }
    JetPoly& operator*=(const JetPoly& o) { return *this = *this * o; }

    bool operator==(const JetPoly&) const = default;

    std::set<std::string> symbols() const {
        std::set<std::string> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [var, exp] : m.factors())
                out.insert(var.symbol);
        return out;
    }

    bool divisible_by(const JetVar& v) const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [&](const auto& t) { return t.first.exponent_of(v) > 0; });
    }

    /// Divide every term by v once; pre: divisible_by(v).
    JetPoly divided_by(const JetVar& v) const {
        JetPoly out;
        for (const auto& [m, c] : terms_)
            out.add_term(m.divided_by_var(v), c);
        return out;
    }

    std::string to_string() const {
        if (terms_.empty())
            return "0";
        if (terms_.size() >= 2) {
            const JetMonomial common = common_factor();
            if (!common.is_unit()) {
                JetPoly rest;
                for (const auto& [m, c] : terms_) {
                    JetMonomial reduced = m;
                    for (const auto& [var, exp] : common.factors())
                        for (unsigned i = 0; i < exp; ++i)
                            reduced = reduced.divided_by_var(var);
                    rest.add_term(reduced, c);
                }
                return common.to_string() + "*(" + rest.render_sum() + ")";
            }
        }
        return render_sum();
    }

private:
    std::map<JetMonomial, Rational> terms_;

    JetMonomial common_factor() const {
        auto it = terms_.begin();
        std::vector<std::pair<JetVar, unsigned>> common(it->first.factors());
        for (++it; it != terms_.end() && !common.empty(); ++it) {
            std::vector<std::pair<JetVar, unsigned>> next;
            for (const auto& [var, exp] : common) {
                const unsigned e = std::min(exp, it->first.exponent_of(var));
                if (e > 0)
                    next.emplace_back(var, e);
            }
            common = std::move(next);
        }
        JetMonomial out;
        for (const auto& [var, exp] : common)
            out = out.times(JetMonomial(var, exp));
        return out;
    }

    // Terms in descending monomial order, signs folded into the separators.
    std::string render_sum() const {
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            const bool negative = c < 0;
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            const Rational mag = negative ? Rational(-c) : c;
            if (m.is_unit())
                out += iterode::to_string(mag);
            else if (mag == 1)
                out += m.to_string();
            else
                out += iterode::to_string(mag) + "*" + m.to_string();
        }
        return out;
    }
};

/// Total derivative: linear, Leibniz on products, bumps each variable's order.
inline JetPoly derivative(const JetPoly& p) {
    JetPoly out;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [var, exp] : m.factors()) {
            JetMonomial dm = m.divided_by_var(var).times(JetMonomial(JetVar(var.symbol, var.order + 1)));
            out.add_term(dm, c * Rational(Int(exp)));
        }
    }
    return out;
}

inline JetPoly pow(const JetPoly& base, unsigned exponent) {
    JetPoly out(1);
    for (unsigned i = 0; i < exponent; ++i)
        out *= base;
    return out;
}

inline Rational pow(const Rational& base, unsigned exponent) {
    Rational out(1);
    for (unsigned i = 0; i < exponent; ++i)
        out *= base;
    return out;
}

/// Evaluate p at concrete rational functions; JetVar(sym, k) becomes the k-th
/// derivative of the binding for sym.  Commutes with the total derivative.
inline RationalFunction substitute(const JetPoly& p,
                                   const std::map<std::string, RationalFunction>& bindings) {
    std::map<std::string, std::vector<RationalFunction>> deriv_cache;
    auto value_of = [&](const JetVar& v) -> const RationalFunction& {
        auto bound = bindings.find(v.symbol);
        if (bound == bindings.end())
            throw std::invalid_argument("unbound jet symbol: " + v.symbol);
        auto& derivs = deriv_cache[v.symbol];
        if (derivs.empty())
            derivs.push_back(bound->second);
        while (derivs.size() <= v.order)
            derivs.push_back(derivative(derivs.back()));
        return derivs[v.order];
    };

    RationalFunction total;
    for (const auto& [m, c] : p.terms()) {
        RationalFunction term{Rational(c)};
        for (const auto& [var, exp] : m.factors())
            term *= pow(value_of(var), exp);
        total += term;
    }
    return total;
}

/// Replace every s-jet by the r-jet it equals once the subleading coefficient
/// is forced to vanish: s^(k) -> -(n-1)/2 * r^(k+1).
inline JetPoly eliminate_s(const JetPoly& p, unsigned n) {
    if (n < 2)
        throw std::invalid_argument("eliminate_s requires order n >= 2");
    const Rational scale = make_rational(-(Int(n) - 1), 2);
    JetPoly out;
    for (const auto& [m, c] : p.terms()) {
        Rational coeff = c;
        JetMonomial nm;
        for (const auto& [var, exp] : m.factors()) {
            if (var.symbol == "s") {
                coeff *= pow(scale, exp);
                nm = nm.times(JetMonomial(JetVar("r", var.order + 1), exp));
            } else if (var.symbol == "r") {
                nm = nm.times(JetMonomial(var, exp));
            } else {
                throw std::invalid_argument("eliminate_s: foreign symbol " + var.symbol);
            }
        }
        out.add_term(nm, coeff);
    }
    return out;
}

/// Specialize r to the constant 1: r itself becomes 1, every r-derivative 0.
inline JetPoly specialize_unit_r(const JetPoly& p) {
    JetPoly out;
    for (const auto& [m, c] : p.terms()) {
        bool vanishes = false;
        JetMonomial nm;
        for (const auto& [var, exp] : m.factors()) {
            if (var.symbol == "r") {
                if (var.order >= 1) {
                    vanishes = true;
                    break;
                }
            } else {
                nm = nm.times(JetMonomial(var, exp));
            }
        }
        if (!vanishes)
            out.add_term(nm, c);
    }
    return out;
}

} // namespace iterode
