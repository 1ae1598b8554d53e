// pincalc: decide orientability, spin, pin+, pin-, pin^c and Lipschitz
// structure existence for products of catalog manifolds, with witnesses.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>

#include "pincalc/expr.hpp"
#include "pincalc/report.hpp"
#include "pincalc/selftest.hpp"
#include "pincalc/steenrod.hpp"

namespace {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,     // parse or usage errors
    exit_unsupported = 2,  // truncated data, inapplicable query, search cap
    exit_internal = 3,  // cross-route disagreement, corrupt ground data
};

bool color_enabled() {
#if defined(_WIN32)
    return false;
#else
    if (std::getenv("NO_COLOR") != nullptr) return false;
    return isatty(fileno(stdout));
#endif
}

int run_guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const pincalc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const pincalc::UnsupportedParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const pincalc::UnsupportedDegreeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_unsupported;
    } catch (const pincalc::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_unsupported;
    } catch (const pincalc::MisuseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const pincalc::InternalCheckError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    } catch (const pincalc::CorruptDataError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_internal;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structure deciders for products of closed manifolds"};
    app.require_subcommand(1);

    std::string expr_text, format = "text";
    int max_degree = 2;
    std::size_t search_cap = pincalc::kDefaultLipschitzPairCap;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* decide = app.add_subcommand("decide", "full structure report for an expression");
    decide->add_option("expr", expr_text, "manifold expression, e.g. \"RP(2)*RP(2)*S(1)\"")
        ->required();
    add_format(decide);
    decide->add_option("--search-cap", search_cap,
                       "cap on the Lipschitz witness search (bundle pairs)");

    CLI::App* classes = app.add_subcommand(
        "classes", "Stiefel-Whitney classes and integral-lift subspace bases");
    classes->add_option("expr", expr_text, "manifold expression")->required();
    classes->add_option("--max-degree", max_degree, "highest degree to print");
    add_format(classes);

    CLI::App* wu = app.add_subcommand("wu", "Wu classes and the Wu-vs-Whitney cross-check");
    wu->add_option("expr", expr_text, "manifold expression")->required();
    add_format(wu);

    CLI::App* catalog =
        app.add_subcommand("catalog", "versioned ground-data document for an expression");
    catalog->add_option("expr", expr_text, "manifold expression")->required();

    CLI::App* verify =
        app.add_subcommand("verify", "run the acceptance and property suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    if (decide->parsed()) {
        return run_guarded([&] {
            auto ast = pincalc::parse_expression(expr_text);
            pincalc::DecisionReport rep;
            if (ast->kind == pincalc::ManifoldExpr::Kind::product) {
                rep = pincalc::full_report_product(
                    pincalc::build_descriptor(*ast->left, 2),
                    pincalc::build_descriptor(*ast->right, 2), 2, search_cap);
            } else {
                rep = pincalc::full_report(pincalc::build_descriptor(*ast, 2), search_cap);
            }
            rep.expression = pincalc::to_string(*ast);
            if (format == "json")
                std::cout << pincalc::render_json(pincalc::to_report_json(rep)) << "\n";
            else
                std::cout << pincalc::render_text(rep, color_enabled());
            return exit_ok;
        });
    }

    if (classes->parsed()) {
        return run_guarded([&] {
            auto ast = pincalc::parse_expression(expr_text);
            auto m = pincalc::build_descriptor(*ast, std::max(max_degree, 2));
            if (!m.ring->degree_known(max_degree))
                throw pincalc::UnsupportedDegreeError(
                    "classes: degree " + std::to_string(max_degree) +
                    " exceeds the ring data for " + m.name + " (complete through degree " +
                    std::to_string(m.ring->stored_max()) + ")");
            std::cout << (format == "json" ? pincalc::classes_json(m, max_degree)
                                           : pincalc::classes_text(m, max_degree));
            if (format == "json") std::cout << "\n";
            return exit_ok;
        });
    }

    if (wu->parsed()) {
        return run_guarded([&] {
            auto ast = pincalc::parse_expression(expr_text);
            auto m = pincalc::build_descriptor(*ast);
            std::cout << (format == "json" ? pincalc::wu_json(m) : pincalc::wu_text(m));
            if (format == "json") std::cout << "\n";
            return exit_ok;
        });
    }

    if (catalog->parsed()) {
        return run_guarded([&] {
            auto ast = pincalc::parse_expression(expr_text);
            auto m = pincalc::build_descriptor(*ast);
            std::cout << pincalc::catalog_document(m) << "\n";
            return exit_ok;
        });
    }

    if (verify->parsed()) {
        return run_guarded([&] {
            auto results = pincalc::run_acceptance(&std::cout);
            return pincalc::all_passed(results) ? exit_ok : exit_internal;
        });
    }

    return exit_usage;
}
