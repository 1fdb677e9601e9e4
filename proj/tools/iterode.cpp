#include <exception>
#include <iostream>

#include "CLI11.hpp"

#include "iterode/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact construction, reduction and testing of linear iterative ODEs"};
    app.require_subcommand(1);
    // Lets the global --order-cap appear after the subcommand name as well.
    app.fallthrough();

    iterode::CommandSpec spec;
    unsigned j_value = 0;

    app.add_option("--order-cap", spec.order_cap, "Largest accepted --order")
        ->capture_default_str();

    CLI::App* generate =
        app.add_subcommand("generate", "Build the order-n iterative equation from r and s");
    generate->add_option("--order", spec.order, "Equation order n")->required();
    generate->add_option("--r", spec.r_text, "Source coefficient r(x)")->required();
    generate->add_option("--s", spec.s_text, "Source coefficient s(x)")->required();
    generate->add_flag("--normal", spec.normal, "Emit the reduced normal form (depends on r only)");
    CLI::Option* list_flag =
        generate->add_flag("--list", spec.list, "Print 'c0; c1; ...' for piping into check");
    generate->add_flag("--json", spec.json, "JSON output")->excludes(list_flag);

    CLI::App* coeffs = app.add_subcommand(
        "coeffs", "Print symbolic coefficients K[n][j], or A[n][j] with --normal");
    coeffs->add_option("--order", spec.order, "Equation order n")->required();
    CLI::Option* j_option = coeffs->add_option("--j", j_value, "Single coefficient index");
    coeffs->add_option("--form", spec.form, "recurrence|algorithmic|closed|simplified|unit-r")
        ->capture_default_str();
    coeffs->add_flag("--normal", spec.normal, "Eliminate s and divide by r^n");

    CLI::App* normalize =
        app.add_subcommand("normalize", "Gauge-reduce a monic equation to normal form");
    normalize->add_option("--order", spec.order, "Equation order n")->required();
    normalize->add_option("--coeffs", spec.coeffs_text, "c0; c1; ... (ascending, monic implied)")
        ->required();
    normalize->add_flag("--json", spec.json, "JSON output");

    CLI::App* check =
        app.add_subcommand("check", "Decide iterativity of an order-3 or order-4 equation");
    check->add_option("--coeffs", spec.coeffs_text, "c0; c1; c2 and optionally c3, or - for stdin")
        ->required();
    check->add_flag("--json", spec.json, "JSON output");

    CLI::App* selftest = app.add_subcommand("selftest", "Cross-validate all computation routes");
    selftest->add_option("--max-order", spec.max_order, "Deepest order to cross-check")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (generate->parsed())
        spec.kind = iterode::CommandSpec::Kind::generate;
    else if (coeffs->parsed())
        spec.kind = iterode::CommandSpec::Kind::coeffs;
    else if (normalize->parsed())
        spec.kind = iterode::CommandSpec::Kind::normalize;
    else if (check->parsed())
        spec.kind = iterode::CommandSpec::Kind::check;
    else
        spec.kind = iterode::CommandSpec::Kind::selftest;
    if (j_option->count() > 0)
        spec.j = j_value;

    try {
        return iterode::run(spec, std::cout);
    } catch (const iterode::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const iterode::consistency_error& e) {
        std::cerr << "internal consistency violation: " << e.what() << "\n";
        return 2;
    } catch (const iterode::division_by_zero& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const iterode::resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
