#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zmgb/io.hpp"
#include "zmgb/normalform.hpp"
#include "zmgb/recursive.hpp"
#include "zmgb/vanishing.hpp"

namespace {

struct CommonOpts {
    std::string modulus;
    std::string vars = "x";
};

const std::map<std::string, zmgb::MonomialOrder> kOrderNames = {
    {"lex", zmgb::MonomialOrder::lex},
    {"deglex", zmgb::MonomialOrder::deglex},
    {"degrevlex", zmgb::MonomialOrder::degrevlex},
};

void add_common(CLI::App* sub, CommonOpts& opts) {
    sub->add_option("--modulus", opts.modulus, "coefficient modulus m (>= 2)")->required();
    sub->add_option("--vars", opts.vars, "comma-separated variable names")
        ->capture_default_str();
}

std::vector<std::string> split_names(const std::string& vars) {
    std::vector<std::string> names;
    std::size_t begin = 0;
    while (begin <= vars.size()) {
        std::size_t end = vars.find(',', begin);
        if (end == std::string::npos)
            end = vars.size();
        std::string name = vars.substr(begin, end - begin);
        const auto first = name.find_first_not_of(" \t");
        const auto last = name.find_last_not_of(" \t");
        names.push_back(first == std::string::npos ? std::string()
                                                   : name.substr(first, last - first + 1));
        begin = end + 1;
    }
    return names;
}

zmgb::RingContext make_context(const CommonOpts& opts) {
    zmgb::Int m;
    try {
        m = zmgb::Int(opts.modulus, 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("--modulus is not a decimal integer");
    }
    return zmgb::RingContext(zmgb::Modulus(m), split_names(opts.vars));
}

std::string describe_entry(const zmgb::BasisEntry& e) {
    std::string out = "((";
    for (std::size_t i = 0; i < e.alpha.size(); ++i)
        out += (i ? ", " : "") + std::to_string(e.alpha[i]);
    out += "), " + e.a.get_str() + ")";
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vanishing-ideal Groebner bases over Z/m: construction, normal "
                 "forms, function counting and polynomial equivalence checking"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string order_name = "lex";
    std::string expr, lhs, rhs, out_file;
    bool expanded = false;
    bool json_output = false;
    std::uint64_t budget = zmgb::kDefaultExhaustionBudget;

    CLI::App* basis = app.add_subcommand("basis", "print the minimal strong basis G_m");
    add_common(basis, opts);
    basis->add_option("--order", order_name, "monomial order for expanded output")
        ->check(CLI::IsMember({"lex", "deglex", "degrevlex"}))
        ->capture_default_str();
    basis->add_flag("--expanded", expanded, "also print each basis polynomial");
    basis->add_flag("--json", json_output, "machine-readable output");
    basis->add_option("--out", out_file, "write the basis as JSON to this file");

    CLI::App* nf = app.add_subcommand("nf", "print the reduced normal form of an expression");
    add_common(nf, opts);
    nf->add_option("--expr", expr, "polynomial expression")->required();
    nf->add_option("--order", order_name, "monomial order used during reduction")
        ->check(CLI::IsMember({"lex", "deglex", "degrevlex"}))
        ->capture_default_str();

    CLI::App* equiv =
        app.add_subcommand("equiv", "decide whether two expressions agree as functions");
    add_common(equiv, opts);
    equiv->add_option("--lhs", lhs, "left expression")->required();
    equiv->add_option("--rhs", rhs, "right expression")->required();

    CLI::App* count =
        app.add_subcommand("count", "count the polynomial functions on (Z/m)^n");
    add_common(count, opts);

    CLI::App* vanish =
        app.add_subcommand("vanish", "evaluate an expression at every point of (Z/m)^n");
    add_common(vanish, opts);
    vanish->add_option("--expr", expr, "polynomial expression")->required();
    vanish->add_option("--budget", budget, "largest point count the check may visit")
        ->capture_default_str();

    CLI::App* smarandache =
        app.add_subcommand("smarandache", "print the smallest k with m | k!");
    add_common(smarandache, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const zmgb::RingContext ctx = make_context(opts);
        const zmgb::MonomialOrder order = kOrderNames.at(order_name);

        if (basis->parsed()) {
            const zmgb::GroebnerBasis g = zmgb::build_basis(ctx.modulus(), ctx.nvars());
            if (json_output) {
                std::cout << zmgb::serialize_basis(g) << "\n";
            } else {
                for (const zmgb::BasisEntry& e : g.entries()) {
                    std::cout << describe_entry(e);
                    if (expanded)
                        std::cout << "  =  "
                                  << zmgb::format_poly(
                                         zmgb::build_p(e.alpha, e.a, ctx.modulus()), ctx, order);
                    std::cout << "\n";
                }
            }
            if (!out_file.empty()) {
                std::ofstream f(out_file);
                if (!f)
                    throw std::runtime_error("cannot open '" + out_file + "' for writing");
                f << zmgb::serialize_basis(g) << "\n";
            }
            return 0;
        }

        if (nf->parsed()) {
            const zmgb::Polynomial f = zmgb::parse_poly(expr, ctx);
            std::cout << zmgb::format_poly(zmgb::reduced_nf(f, order), ctx, order) << "\n";
            return 0;
        }

        if (equiv->parsed()) {
            const zmgb::Polynomial f = zmgb::parse_poly(lhs, ctx);
            const zmgb::Polynomial g = zmgb::parse_poly(rhs, ctx);
            const zmgb::Polynomial diff = zmgb::reduced_nf(f - g);
            if (diff.is_zero()) {
                std::cout << "equivalent\n";
                return 0;
            }
            std::cout << "not equivalent\n";
            std::cout << "difference normal form: " << zmgb::format_poly(diff, ctx) << "\n";
            return 1;
        }

        if (count->parsed()) {
            const zmgb::Int n = zmgb::count_polynomial_functions(ctx.modulus(), ctx.nvars());
            const std::string digits = n.get_str();
            std::cout << digits << "\n";
            std::cout << "digits: " << digits.size() << "\n";
            return 0;
        }

        if (vanish->parsed()) {
            const zmgb::Polynomial f = zmgb::parse_poly(expr, ctx);
            if (zmgb::is_vanishing(f, budget)) {
                std::cout << "vanishing\n";
                return 0;
            }
            std::cout << "not vanishing\n";
            return 1;
        }

        if (smarandache->parsed()) {
            std::cout << zmgb::smarandache(ctx.modulus()).get_str() << "\n";
            return 0;
        }
    } catch (const zmgb::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
