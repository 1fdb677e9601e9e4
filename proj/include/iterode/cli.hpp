#pragma once

#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "iterode/criteria.hpp"
#include "iterode/errors.hpp"
#include "iterode/iterative.hpp"
#include "iterode/linear_ode.hpp"
#include "iterode/normal_form.hpp"
#include "iterode/parser.hpp"
#include "iterode/selftest.hpp"

namespace iterode {

/// Parsed command line, ready for run().  The wrapper in tools/ populates it;
/// tests construct it directly.
struct CommandSpec {
    enum class Kind { generate, coeffs, normalize, check, selftest };

    Kind kind = Kind::selftest;
    unsigned order = 0;
    std::string r_text;
    std::string s_text;
    std::string coeffs_text;
    std::optional<unsigned> j;
    std::string form = "recurrence";
    bool normal = false;
    bool list = false;
    bool json = false;
    unsigned order_cap = 12;
    unsigned max_order = 7;
};

namespace detail {

inline void validate_order(unsigned order, unsigned cap) {
    if (order < 1)
        throw std::invalid_argument("--order must be at least 1");
    if (order > cap)
        throw std::invalid_argument("--order " + std::to_string(order) + " exceeds the cap of " +
                                    std::to_string(cap) + " (raise it with --order-cap)");
}

inline void print_equation(const LinearODE& ode, bool json, std::ostream& out) {
    if (!json) {
        out << ode.to_string() << "\n";
        return;
    }
    nlohmann::ordered_json doc;
    doc["order"] = ode.order();
    auto coefficients = nlohmann::ordered_json::array();
    for (const auto& c : ode.coefficients())
        coefficients.push_back(c.to_string());
    doc["coefficients"] = std::move(coefficients);
    out << doc.dump(2) << "\n";
}

inline int run_generate(const CommandSpec& spec, std::ostream& out) {
    validate_order(spec.order, spec.order_cap);
    const RationalFunction r = parse_expression(spec.r_text);
    const RationalFunction s = parse_expression(spec.s_text);
    const LinearODE ode = spec.normal ? generate_normal_concrete(spec.order, r)
                                      : generate_concrete(spec.order, r, s);
    if (spec.list) {
        // Coefficient-list form, consumable by `check --coeffs -` through a pipe.
        const auto& coefficients = ode.coefficients();
        for (std::size_t i = 0; i < coefficients.size(); ++i)
            out << (i ? "; " : "") << coefficients[i].to_string();
        out << "\n";
        return 0;
    }
    print_equation(ode, spec.json, out);
    return 0;
}

inline int run_coeffs(const CommandSpec& spec, std::ostream& out) {
    validate_order(spec.order, spec.order_cap);
    const unsigned n = spec.order;
    const std::string& form = spec.form;
    if (form != "recurrence" && form != "algorithmic" && form != "closed" &&
        form != "simplified" && form != "unit-r")
        throw std::invalid_argument("unknown --form: " + form);
    if (spec.normal && form == "unit-r")
        throw std::invalid_argument("--normal is incompatible with --form unit-r");
    if (spec.normal && n < 2)
        throw std::invalid_argument("--normal needs --order of at least 2");

    unsigned jlo = (form == "closed" || form == "simplified") ? 1 : 0;
    if (spec.normal)
        jlo = 2;

    std::optional<CoefficientTable> table;
    std::vector<JetPoly> unit;
    if (form == "recurrence")
        table.emplace(n);
    else if (form == "unit-r")
        unit = coeffs_unit_r(n);

    const auto kvalue = [&](unsigned j) -> JetPoly {
        if (table)
            return table->entries(n, static_cast<int>(j));
        if (!unit.empty())
            return unit[j];
        if (form == "algorithmic")
            return coeffs_algorithmic(n, j);
        if (form == "closed")
            return coeffs_closed_form(n, j);
        return coeffs_simplified(n, j);
    };
    const auto rendered = [&](unsigned j) {
        if (!spec.normal)
            return kvalue(j).to_string();
        return DiffRational(eliminate_s(kvalue(j), n), n).to_string();
    };

    if (spec.j) {
        if (*spec.j < jlo || *spec.j > n)
            throw std::invalid_argument("--j must lie between " + std::to_string(jlo) + " and " +
                                        std::to_string(n) + " for this form");
        out << rendered(*spec.j) << "\n";
        return 0;
    }
    for (unsigned j = jlo; j <= n; ++j)
        out << (spec.normal ? "A" : "K") << "[" << n << "][" << j << "] = " << rendered(j) << "\n";
    return 0;
}

inline int run_normalize(const CommandSpec& spec, std::ostream& out) {
    validate_order(spec.order, spec.order_cap);
    auto coeffs = parse_coefficient_list(spec.coeffs_text);
    if (coeffs.size() != spec.order)
        throw std::invalid_argument("--order " + std::to_string(spec.order) + " needs " +
                                    std::to_string(spec.order) + " coefficients, got " +
                                    std::to_string(coeffs.size()));
    print_equation(gauge_reduce(LinearODE(spec.order, std::move(coeffs))), spec.json, out);
    return 0;
}

inline int run_check(const CommandSpec& spec, std::ostream& out) {
    std::string text = spec.coeffs_text;
    if (text == "-")
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    auto coeffs = parse_coefficient_list(text);
    if (coeffs.size() != 3 && coeffs.size() != 4)
        throw std::invalid_argument(
            "check needs 3 or 4 coefficients (c0; c1; c2 and optionally c3), got " +
            std::to_string(coeffs.size()));
    const unsigned n = static_cast<unsigned>(coeffs.size());
    const IterativityReport report = is_iterative(LinearODE(n, std::move(coeffs)));
    if (spec.json) {
        nlohmann::ordered_json doc;
        doc["order"] = report.order;
        doc["iterative"] = report.verdict;
        auto residuals = nlohmann::ordered_json::array();
        for (const auto& res : report.residuals)
            residuals.push_back(res.to_string());
        doc["residuals"] = std::move(residuals);
        doc["method"] = to_string(report.method);
        out << doc.dump(2) << "\n";
    } else {
        out << "order: " << report.order << "\n";
        out << "method: " << to_string(report.method) << "\n";
        out << "residuals: ";
        for (std::size_t i = 0; i < report.residuals.size(); ++i)
            out << (i ? "; " : "") << report.residuals[i].to_string();
        out << "\n";
        out << "verdict: " << (report.verdict ? "iterative" : "not iterative") << "\n";
    }
    return report.verdict ? 0 : 3;
}

} // namespace detail

/// Executes a parsed command.  Returns 0 on success and 3 for a well-formed
/// `check` whose equation is not iterative; bad input surfaces as exceptions
/// (parse_error, std::invalid_argument, std::domain_error -> exit 1 in the
/// wrapper; consistency_error -> exit 2).
inline int run(const CommandSpec& spec, std::ostream& out) {
    switch (spec.kind) {
    case CommandSpec::Kind::generate: return detail::run_generate(spec, out);
    case CommandSpec::Kind::coeffs: return detail::run_coeffs(spec, out);
    case CommandSpec::Kind::normalize: return detail::run_normalize(spec, out);
    case CommandSpec::Kind::check: return detail::run_check(spec, out);
    case CommandSpec::Kind::selftest:
        if (spec.max_order < 1)
            throw std::invalid_argument("--max-order must be at least 1");
        run_selftest(spec.max_order, out);
        return 0;
    }
    throw std::logic_error("unhandled subcommand");
}

} // namespace iterode
