#pragma once

#include <cctype>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "iterode/errors.hpp"
#include "iterode/poly.hpp"
#include "iterode/rational.hpp"
#include "iterode/rational_function.hpp"

namespace iterode {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Syntax tree for coefficient expressions in the variable x.
struct Expr {
    struct Nat {
        Int value;
    };
    struct RatLit {
        Int num;
        Int den;
    };
    struct VarX {};
    struct Neg {
        ExprPtr operand;
    };
    struct Bin {
        char op; // + - * /
        ExprPtr lhs;
        ExprPtr rhs;
    };
    struct Pow {
        ExprPtr base;
        unsigned exponent;
    };

    std::variant<Nat, RatLit, VarX, Neg, Bin, Pow> node;
};

inline ExprPtr make_expr(auto node) {
    return std::make_shared<const Expr>(Expr{std::move(node)});
}

namespace detail {

/// Recursive descent over
///     expr   := term (("+"|"-") term)*
///     term   := factor (("*"|"/") factor)*
///     factor := "-" factor | atom ("^" nat)?
///     atom   := nat | "x" | "(" expr ")"
/// plus digit-led juxtaposition: a number immediately followed by "x" or "("
/// multiplies the powered atom after it ("3x^2" reads as 3*(x^2)), binding
/// tighter than explicit "*" and "/".  Division is left-associative at the
/// term level; rational literals like "3/4" fall out of it.
class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        if (!at_end())
            fail("unexpected trailing input");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& message) const { throw parse_error(message, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ == text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        for (;;) {
            if (eat('+'))
                lhs = make_expr(Expr::Bin{'+', std::move(lhs), term()});
            else if (eat('-'))
                lhs = make_expr(Expr::Bin{'-', std::move(lhs), term()});
            else
                return lhs;
        }
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        for (;;) {
            if (eat('*'))
                lhs = make_expr(Expr::Bin{'*', std::move(lhs), factor()});
            else if (eat('/'))
                lhs = make_expr(Expr::Bin{'/', std::move(lhs), factor()});
            else
                return lhs;
        }
    }

    ExprPtr factor() {
        if (eat('-'))
            return make_expr(Expr::Neg{factor()});
        bool numeric = false;
        ExprPtr base = powered(&numeric);
        if (numeric && (peek() == 'x' || peek() == '('))
            return make_expr(Expr::Bin{'*', std::move(base), powered(nullptr)});
        return base;
    }

    ExprPtr powered(bool* numeric) {
        ExprPtr base = atom(numeric);
        if (eat('^'))
            return make_expr(Expr::Pow{std::move(base), exponent()});
        return base;
    }

    ExprPtr atom(bool* numeric) {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            if (numeric)
                *numeric = true;
            return make_expr(Expr::Nat{nat()});
        }
        if (c == 'x') {
            ++pos_;
            return make_expr(Expr::VarX{});
        }
        if (c == '(') {
            ++pos_;
            ExprPtr inner = expr();
            if (!eat(')'))
                fail("expected ')'");
            return inner;
        }
        fail(pos_ == text_.size() ? "unexpected end of input" : "expected a number, 'x' or '('");
    }

    Int nat() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return Int(std::string(text_.substr(start, pos_ - start)));
    }

    unsigned exponent() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("exponent must be a non-negative integer literal");
        const Int value = nat();
        if (value > Int(std::numeric_limits<unsigned>::max()))
            throw resource_limit_error("exponent " + value.str() + " exceeds the supported range");
        return value.convert_to<unsigned>();
    }
};

} // namespace detail

inline ExprPtr parse_ast(std::string_view text) { return detail::ExpressionParser(text).parse(); }

inline RationalFunction evaluate(const Expr& e) {
    return std::visit(
        [](const auto& node) -> RationalFunction {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Expr::Nat>) {
                return RationalFunction(Rational(node.value));
            } else if constexpr (std::is_same_v<T, Expr::RatLit>) {
                return RationalFunction(make_rational(node.num, node.den));
            } else if constexpr (std::is_same_v<T, Expr::VarX>) {
                return RationalFunction(Poly::variable());
            } else if constexpr (std::is_same_v<T, Expr::Neg>) {
                return -evaluate(*node.operand);
            } else if constexpr (std::is_same_v<T, Expr::Bin>) {
                const RationalFunction lhs = evaluate(*node.lhs);
                const RationalFunction rhs = evaluate(*node.rhs);
                switch (node.op) {
                case '+': return lhs + rhs;
                case '-': return lhs - rhs;
                case '*': return lhs * rhs;
                case '/': return lhs / rhs;
                default: throw std::logic_error("unknown binary operator");
                }
            } else {
                return pow(evaluate(*node.base), node.exponent);
            }
        },
        e.node);
}

/// Fully parenthesized rendering; parsing it back yields an equal value.
inline std::string render(const Expr& e) {
    return std::visit(
        [](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Expr::Nat>) {
                return node.value.str();
            } else if constexpr (std::is_same_v<T, Expr::RatLit>) {
                return "(" + node.num.str() + "/" + node.den.str() + ")";
            } else if constexpr (std::is_same_v<T, Expr::VarX>) {
                return "x";
            } else if constexpr (std::is_same_v<T, Expr::Neg>) {
                return "-(" + render(*node.operand) + ")";
            } else if constexpr (std::is_same_v<T, Expr::Bin>) {
                return "(" + render(*node.lhs) + " " + node.op + " " + render(*node.rhs) + ")";
            } else {
                return "(" + render(*node.base) + ")^" + std::to_string(node.exponent);
            }
        },
        e.node);
}

inline RationalFunction parse_expression(std::string_view text) {
    return evaluate(*parse_ast(text));
}

/// Semicolon-separated coefficient expressions, ascending derivative order
/// (c_0 first); a single trailing semicolon is permitted.  Error offsets
/// refer to the full input string.
inline std::vector<RationalFunction> parse_coefficient_list(std::string_view text) {
    std::vector<RationalFunction> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t semi = text.find(';', start);
        const std::string_view piece =
            semi == std::string_view::npos ? text.substr(start) : text.substr(start, semi - start);
        if (piece.find_first_not_of(" \t\r\n") == std::string_view::npos) {
            if (semi == std::string_view::npos && !out.empty())
                break;
            throw parse_error("empty coefficient entry", start);
        }
        try {
            out.push_back(parse_expression(piece));
        } catch (const parse_error& err) {
            throw parse_error(err.message(), start + err.offset());
        }
        if (semi == std::string_view::npos)
            break;
        start = semi + 1;
    }
    return out;
}

} // namespace iterode
