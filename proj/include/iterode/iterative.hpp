#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "iterode/diff_rational.hpp"
#include "iterode/errors.hpp"
#include "iterode/jet.hpp"
#include "iterode/linear_ode.hpp"
#include "iterode/rational_function.hpp"

namespace iterode {

/// The first-order operator  Psi f = r f' + s f  in any differential ring.
template <class Value>
Value psi_apply(const Value& f, const Value& r, const Value& s) {
    return r * derivative(f) + s * f;
}

inline JetPoly psi(const JetPoly& f) {
    return psi_apply(f, JetPoly::var("r"), JetPoly::var("s"));
}

inline JetPoly psi_unit(const JetPoly& f) {
    return psi_apply(f, JetPoly(Rational(1)), JetPoly::var("s"));
}

inline RationalFunction psi(const RationalFunction& f, const RationalFunction& r,
                            const RationalFunction& s) {
    return psi_apply(f, r, s);
}

/// Triangular table of the coefficients K[m][j] of y^(m-j) in Psi^m y, so
/// K[m][0] is the leading coefficient r^m.  Rows are built from
///     K[m][j] = r * K[m-1][j] + Psi K[m-1][j-1],
/// with K[0][0] = 1 and every entry outside 0 <= j <= m equal to zero.
class CoefficientTable {
public:
    explicit CoefficientTable(unsigned order) : order_(order), rows_(order + 1) {
        rows_[0] = {JetPoly(Rational(1))};
        const JetPoly r = JetPoly::var("r");
        for (unsigned m = 1; m <= order; ++m) {
            rows_[m].resize(m + 1);
            for (unsigned j = 0; j <= m; ++j)
                rows_[m][j] = r * entries(m - 1, static_cast<int>(j)) +
                              psi(entries(m - 1, static_cast<int>(j) - 1));
        }
    }

    unsigned order() const { return order_; }

    /// K[m][j] with the boundary convention: out-of-range j yields zero.
    const JetPoly& entries(unsigned m, int j) const {
        if (m > order_)
            throw std::invalid_argument("coefficient row " + std::to_string(m) +
                                        " exceeds table order " + std::to_string(order_));
        if (j < 0 || j > static_cast<int>(m))
            return kZero;
        return rows_[m][static_cast<unsigned>(j)];
    }

    /// Row m as K[m][0] .. K[m][m].
    const std::vector<JetPoly>& row(unsigned m) const {
        if (m > order_)
            throw std::invalid_argument("coefficient row " + std::to_string(m) +
                                        " exceeds table order " + std::to_string(order_));
        return rows_[m];
    }

private:
    unsigned order_;
    std::vector<std::vector<JetPoly>> rows_;

    inline static const JetPoly kZero{};
};

inline CoefficientTable coeffs_recurrence(unsigned n) { return CoefficientTable(n); }

/// K[n][j] by the descending sum  K[n][j] = sum_{k=j}^{n} r^(n-k) Psi K[k-1][j-1],
/// memoized across the subproblems it revisits.
inline JetPoly coeffs_algorithmic(unsigned n, unsigned j) {
    if (j > n)
        throw std::invalid_argument("coefficient index j = " + std::to_string(j) +
                                    " exceeds order n = " + std::to_string(n));
    const JetPoly r = JetPoly::var("r");
    std::map<std::pair<unsigned, unsigned>, JetPoly> memo;
    auto rec = [&](auto&& self, unsigned m, unsigned i) -> const JetPoly& {
        const auto key = std::make_pair(m, i);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        JetPoly value;
        if (i == 0) {
            value = pow(r, m);
        } else {
            for (unsigned k = i; k <= m; ++k)
                value += pow(r, m - k) * psi(self(self, k - 1, i - 1));
        }
        return memo.emplace(key, std::move(value)).first->second;
    };
    return rec(rec, n, j);
}

/// Index frame of the nested multi-sum for K[n][j]: tuples (k_1, ..., k_j)
/// where k_i runs from i to M_i = n + C(j,2) - C(i,2) - (k_{i+1} + ... + k_j).
/// Bounds depend on the outer indices, so enumeration proceeds outermost-first
/// (k_j down to k_1); an empty range contributes no tuples.  Each visit
/// receives the tuple and the innermost exponent alpha = M_0.
struct MultiSumFrame {
    unsigned n;
    unsigned j; // at least 1

    template <class Visit>
    void for_each(Visit&& visit) const {
        const long long cj2 = static_cast<long long>(j) * (j - 1) / 2;
        std::vector<long long> k(j + 1, 0);
        auto rec = [&](auto&& self, unsigned i, long long beta) -> void {
            if (i == 0) {
                visit(k, static_cast<long long>(n) + cj2 - beta);
                return;
            }
            const long long upper =
                static_cast<long long>(n) + cj2 - static_cast<long long>(i) * (i - 1) / 2 - beta;
            for (long long v = i; v <= upper; ++v) {
                k[i] = v;
                self(self, i - 1, beta + v);
            }
        };
        rec(rec, j, 0);
    }
};

/// K[n][j] as the explicit j-fold nested sum over the MultiSumFrame tuples,
/// each contributing
///     r^(k_j - j) Psi [ r^(k_{j-1} - (j-1)) Psi [ ... r^(k_1 - 1) Psi r^alpha ] ].
/// Defined for 1 <= j <= n.
inline JetPoly coeffs_closed_form(unsigned n, unsigned j) {
    if (j < 1 || j > n)
        throw std::invalid_argument("closed form is defined for 1 <= j <= n");
    const JetPoly r = JetPoly::var("r");
    JetPoly total;
    MultiSumFrame{n, j}.for_each([&](const std::vector<long long>& k, long long alpha) {
        if (alpha < 0)
            throw consistency_error("negative inner exponent in closed-form sum");
        JetPoly t = pow(r, static_cast<unsigned>(alpha));
        for (unsigned u = 1; u <= j; ++u)
            t = pow(r, static_cast<unsigned>(k[u] - u)) * psi(t);
        total += t;
    });
    return total;
}

/// K[n][j] as a sum over strictly increasing tuples 1 <= k_1 < ... < k_j <= n:
///     r^(n - k_j) Psi [ r^(k_j - k_{j-1} - 1) Psi [ ... Psi r^(k_1 - 1) ] ].
/// Defined for 1 <= j <= n.
inline JetPoly coeffs_simplified(unsigned n, unsigned j) {
    if (j < 1 || j > n)
        throw std::invalid_argument("simplified form is defined for 1 <= j <= n");
    const JetPoly r = JetPoly::var("r");
    std::vector<unsigned> k(j + 1, 0);
    JetPoly total;
    auto rec = [&](auto&& self, unsigned i) -> void {
        if (i == 0) {
            JetPoly t = psi(pow(r, k[1] - 1));
            for (unsigned u = 2; u <= j; ++u)
                t = psi(pow(r, k[u] - k[u - 1] - 1) * t);
            total += pow(r, n - k[j]) * t;
            return;
        }
        const unsigned hi = (i == j) ? n : k[i + 1] - 1;
        for (unsigned v = i; v <= hi; ++v) {
            k[i] = v;
            self(self, i - 1);
        }
    };
    rec(rec, j);
    return total;
}

/// Number of index tuples in the nested multi-sum for K[n][j]; equals C(n, j).
inline Int term_count(unsigned n, unsigned j) {
    if (j == 0)
        return 1;
    Int count = 0;
    MultiSumFrame{n, j}.for_each([&](const std::vector<long long>&, long long) { ++count; });
    return count;
}

/// Coefficients for the unit source equation y' = s y:
///     K[n][0] = 1  and  K[n][j] = C(n,j) Psi^(j-1) s  for 1 <= j <= n,
/// where the j = 0 entry realizes the Psi^(-1) f = 1 convention.
inline std::vector<JetPoly> coeffs_unit_r(unsigned n) {
    if (n < 1)
        throw std::invalid_argument("equation order must be at least 1");
    std::vector<JetPoly> out(n + 1);
    out[0] = JetPoly(Rational(1));
    JetPoly iterate = JetPoly::var("s"); // Psi^(j-1) s
    for (unsigned j = 1; j <= n; ++j) {
        out[j] = JetPoly(Rational(binomial(n, j))) * iterate;
        iterate = psi_unit(iterate);
    }
    return out;
}

/// Normal-form coefficients A[n][2] .. A[n][n] of the order-n iterative
/// equation, as differential rational expressions in r alone.  Eliminating s
/// must annihilate K[n][1]; anything else is a failed internal cross-check.
inline std::vector<DiffRational> normal_coeffs(unsigned n) {
    if (n < 2)
        throw std::invalid_argument("normal coefficients are defined for order n >= 2");
    const CoefficientTable table(n);
    if (!eliminate_s(table.entries(n, 1), n).is_zero())
        throw consistency_error("subleading coefficient survives the elimination of s");
    std::vector<DiffRational> out;
    out.reserve(n - 1);
    for (unsigned j = 2; j <= n; ++j)
        out.emplace_back(eliminate_s(table.entries(n, static_cast<int>(j)), n), n);
    return out;
}

/// Monic order-n iterative equation generated by the source equation
/// r y' + s y = 0, i.e. Psi^n y = 0 divided through by r^n.  The coefficients
/// of y^(k) in Psi^m y are iterated directly on concrete rational functions.
inline LinearODE generate_concrete(unsigned n, const RationalFunction& r,
                                   const RationalFunction& s) {
    if (n < 1)
        throw std::invalid_argument("equation order must be at least 1");
    if (r.is_zero())
        throw std::domain_error("source equation is degenerate: r = 0");
    std::vector<RationalFunction> c{RationalFunction(Rational(1))};
    for (unsigned m = 0; m < n; ++m) {
        std::vector<RationalFunction> next(c.size() + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k] += r * derivative(c[k]) + s * c[k];
            next[k + 1] += r * c[k];
        }
        c = std::move(next);
    }
    std::vector<RationalFunction> monic(n);
    for (unsigned k = 0; k < n; ++k)
        monic[k] = c[k] / c[n]; // c[n] = r^n, nonzero
    return LinearODE(n, std::move(monic));
}

/// Normal form of the order-n iterative equation with source coefficient r:
/// the y^(n-1) term is absent and the remaining coefficients depend on r only.
inline LinearODE generate_normal_concrete(unsigned n, const RationalFunction& r) {
    if (n < 1)
        throw std::invalid_argument("equation order must be at least 1");
    if (r.is_zero())
        throw std::domain_error("source equation is degenerate: r = 0");
    std::vector<RationalFunction> c(n);
    if (n >= 2) {
        const auto normal = normal_coeffs(n);
        for (unsigned j = 2; j <= n; ++j)
            c[n - j] = substitute(normal[j - 2], r);
    }
    return LinearODE(n, std::move(c));
}

} // namespace iterode
