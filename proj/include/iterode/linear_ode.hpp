#pragma once

#include <string>
#include <utility>
#include <vector>

#include "iterode/rational_function.hpp"

namespace iterode {

inline std::string derivative_name(unsigned k) {
    if (k <= 3)
        return "y" + std::string(k, '\'');
    return "y^(" + std::to_string(k) + ")";
}

/// Monic linear ODE  y^(n) + c_{n-1} y^(n-1) + ... + c_1 y' + c_0 y = 0.
/// Coefficients are stored ascending, c_0 first.
class LinearODE {
public:
    LinearODE(unsigned order, std::vector<RationalFunction> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {
        if (order_ < 1)
            throw std::invalid_argument("equation order must be at least 1");
        if (coeffs_.size() != order_)
            throw std::invalid_argument("expected " + std::to_string(order_) +
                                        " coefficients, got " + std::to_string(coeffs_.size()));
    }

    unsigned order() const { return order_; }

    const std::vector<RationalFunction>& coefficients() const { return coeffs_; }

    /// Coefficient of y^(k), 0 <= k < order.
    const RationalFunction& coefficient(unsigned k) const { return coeffs_.at(k); }

    bool operator==(const LinearODE&) const = default;

    std::string to_string() const {
        std::string out = derivative_name(order_);
        for (unsigned k = order_; k-- > 0;) {
            if (coeffs_[k].is_zero())
                continue;
            out += " + (" + coeffs_[k].to_string() + ")*" + derivative_name(k);
        }
        return out + " = 0";
    }

private:
    unsigned order_;
    std::vector<RationalFunction> coeffs_; // c_0 .. c_{n-1}
};

} // namespace iterode
