// Command-line front end for the mukai library.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mukai/mukai.hpp"

namespace {

using namespace mukai;

enum exit_code : int {
    ok = 0,
    check_failed = 1,
    usage = 2,
    file_not_found = 3,
    syntax = 4,
    mismatch = 5,
    math = 6,
    bad_space_file = 7,
};

struct file_missing : error {
    explicit file_missing(const std::string& path) : error("cannot open file '" + path + "'") {}
};

/// Built-in name ("p2", "k3 x t1", ...) or "file:PATH" for a space description file.
space_ptr resolve_space(const std::string& spec)
{
    if (spec.rfind("file:", 0) == 0) {
        const std::string path = spec.substr(5);
        std::ifstream in(path);
        if (!in) throw file_missing(path);
        return read_space(in);
    }
    return builtin_space(spec);
}

void print_report(const check_report& r) { std::cout << r.to_json().dump(2) << "\n"; }

int show(const space_ptr& s, const std::string& format)
{
    if (format == "file") {
        write_space(std::cout, *s);
        return ok;
    }
    std::size_t width = 4;
    for (const auto& b : s->basis()) width = std::max(width, b.name.size());
    std::cout << "space " << s->name() << "\n";
    std::cout << "dim " << s->dim() << "\n";
    std::cout << "basis (" << s->size() << "):\n";
    for (std::size_t k = 0; k < s->size(); ++k) {
        const auto& b = s->basis(k);
        std::cout << "  " << std::setw(4) << k << "  " << std::left << std::setw(static_cast<int>(width)) << b.name
                  << std::right << "  (" << b.p << "," << b.q << ")";
        if (k == s->point_index()) std::cout << "  point";
        std::cout << "\n";
    }
    std::cout << "c(T) = " << tangent_chern(s) << "\n";
    std::cout << "td = " << todd(s) << "\n";
    std::cout << "euler characteristic = " << euler_characteristic(*s) << "\n";
    return ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact cohomological Fourier-Mukai toolkit: Mukai vectors, pairings and integral transforms"};
    app.require_subcommand(1);

    std::string space_spec, space_file, x_spec, y_spec, z_spec;
    std::string e1, e2, expr, kernel, kernel2, inverse_kernel, klass, side = "left", format = "table";
    std::vector<std::string> spaces;
    std::string suite;
    bool classes = false, backward = false;
    std::uint64_t seed = 1;
    int samples = 100, twist_range = 4;

    auto add_space = [&](CLI::App* cmd) {
        cmd->add_option("--space", space_spec, "Built-in space (p1..p4, k3, t1, t2, products 'p1 x p2') or file:PATH");
        cmd->add_option("--space-file", space_file, "Space description file");
    };

    auto* show_cmd = app.add_subcommand("show", "Print the basis, c(T) and Td of a space");
    add_space(show_cmd);
    show_cmd->add_option("--format", format, "table or file")->check(CLI::IsMember({"table", "file"}));

    auto* pair_cmd = app.add_subcommand("pair", "Euler pairing chi(E1, E2) of K-theory expressions");
    add_space(pair_cmd);
    pair_cmd->add_option("--e1", e1)->required();
    pair_cmd->add_option("--e2", e2)->required();
    pair_cmd->add_flag("--classes", classes, "Read e1, e2 as classes and print the Mukai pairing <e1, e2>");

    auto* mukai_cmd = app.add_subcommand("mukai", "Mukai vector v(E) = ch(E) sqrt(Td)");
    add_space(mukai_cmd);
    mukai_cmd->add_option("--expr", expr)->required();

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a class expression");
    add_space(eval_cmd);
    eval_cmd->add_option("--expr", expr)->required();

    auto* transform_cmd = app.add_subcommand("transform", "Apply the cohomological transform of a kernel");
    transform_cmd->add_option("--x", x_spec)->required();
    transform_cmd->add_option("--y", y_spec)->required();
    transform_cmd->add_option("--kernel", kernel, "Class expression on X x Y")->required();
    transform_cmd->add_option("--class", klass, "Class on X (on Y with --backward)")->required();
    transform_cmd->add_flag("--backward", backward, "Read the kernel as a transform Y -> X");

    auto* compose_cmd = app.add_subcommand("compose", "Compose kernels: k2 o k1");
    compose_cmd->add_option("--x", x_spec)->required();
    compose_cmd->add_option("--y", y_spec)->required();
    compose_cmd->add_option("--z", z_spec)->required();
    compose_cmd->add_option("--k1", kernel, "Kernel on X x Y")->required();
    compose_cmd->add_option("--k2", kernel2, "Kernel on Y x Z")->required();

    auto* adjoint_cmd = app.add_subcommand("adjoint", "Kernel of the left or right adjoint transform");
    adjoint_cmd->add_option("--x", x_spec)->required();
    adjoint_cmd->add_option("--y", y_spec)->required();
    adjoint_cmd->add_option("--kernel", kernel)->required();
    adjoint_cmd->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));

    auto* verify_cmd = app.add_subcommand("verify", "Run a property suite and print a JSON report");
    verify_cmd->add_option("suite", suite)
        ->required()
        ->check(CLI::IsMember({"tau-props", "sqrt-props", "euler", "identity", "adjointness", "isometry",
                               "composition", "functoriality", "columns"}));
    verify_cmd->add_option("--space", spaces, "Spaces for single-space suites (repeatable)");
    verify_cmd->add_option("--space-file", space_file, "Space description file");
    verify_cmd->add_option("--x", x_spec);
    verify_cmd->add_option("--y", y_spec);
    verify_cmd->add_option("--z", z_spec);
    verify_cmd->add_option("--kernel", kernel, "Kernel on X x Y (a K-theory expression for functoriality)");
    verify_cmd->add_option("--kernel2", kernel2, "Second kernel on Y x Z");
    verify_cmd->add_option("--inverse", inverse_kernel, "Inverse kernel on Y x X (isometry)");
    verify_cmd->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--samples", samples);
    verify_cmd->add_option("--range", twist_range, "Twist range for the euler suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    auto single_space = [&]() -> space_ptr {
        if (!space_file.empty()) return resolve_space("file:" + space_file);
        if (space_spec.empty()) throw CLI::RequiredError("--space or --space-file");
        return resolve_space(space_spec);
    };
    auto pair_space = [&]() -> space_ptr {
        if (x_spec.empty() || y_spec.empty()) throw CLI::RequiredError("--x and --y");
        return product(resolve_space(x_spec), resolve_space(y_spec));
    };
    auto need = [](const std::string& v, const char* flag) {
        if (v.empty()) throw CLI::RequiredError(flag);
    };

    try {
        if (*show_cmd) return show(single_space(), format);

        if (*pair_cmd) {
            const space_ptr s = single_space();
            if (classes)
                std::cout << mukai_pairing(parse_class_expr(e1, s), parse_class_expr(e2, s)) << "\n";
            else
                std::cout << euler_pairing(parse_kexpr(e1, s), parse_kexpr(e2, s)) << "\n";
            return ok;
        }
        if (*mukai_cmd) {
            const space_ptr s = single_space();
            std::cout << mukai_vector(parse_kexpr(expr, s)) << "\n";
            return ok;
        }
        if (*eval_cmd) {
            std::cout << parse_class_expr(expr, single_space()) << "\n";
            return ok;
        }
        if (*transform_cmd) {
            const space_ptr xy = pair_space();
            const coh_class mu = parse_class_expr(kernel, xy);
            if (backward)
                std::cout << apply_transform_backward(mu, parse_class_expr(klass, xy->second())) << "\n";
            else
                std::cout << apply_transform(mu, parse_class_expr(klass, xy->first())) << "\n";
            return ok;
        }
        if (*compose_cmd) {
            const space_ptr x = resolve_space(x_spec), y = resolve_space(y_spec), z = resolve_space(z_spec);
            const coh_class mu = parse_class_expr(kernel, product(x, y));
            const coh_class nu = parse_class_expr(kernel2, product(y, z));
            std::cout << compose_kernels(mu, nu) << "\n";
            return ok;
        }
        if (*adjoint_cmd) {
            const coh_class e = parse_class_expr(kernel, pair_space());
            std::cout << (side == "left" ? left_adjoint_kernel(e) : right_adjoint_kernel(e)) << "\n";
            return ok;
        }
        if (*verify_cmd) {
            check_report report;
            if (suite == "tau-props" || suite == "sqrt-props" || suite == "euler" || suite == "identity") {
                std::vector<space_ptr> targets;
                for (const auto& s : spaces) targets.push_back(resolve_space(s));
                if (!space_file.empty()) targets.push_back(resolve_space("file:" + space_file));
                if (targets.empty()) throw CLI::RequiredError("--space");
                report.check = suite;
                for (const auto& s : targets) {
                    check_report r = suite == "tau-props"    ? verify_tau_properties(s, seed, 10)
                                     : suite == "sqrt-props" ? verify_sqrt_properties(s, seed, samples)
                                     : suite == "euler"      ? verify_euler_mukai(s, twist_range)
                                                             : verify_identity_kernel(s);
                    report.space_names.push_back(s->name());
                    if (report.kernel_description.empty()) report.kernel_description = r.kernel_description;
                    report.merge(r);
                }
            } else if (suite == "adjointness" || suite == "columns") {
                need(kernel, "--kernel");
                const coh_class e = parse_class_expr(kernel, pair_space());
                report = suite == "columns"
                             ? verify_columns(e, kernel)
                             : verify_adjointness(e, side == "left" ? adjoint_side::left : adjoint_side::right, kernel);
            } else if (suite == "isometry") {
                need(kernel, "--kernel");
                need(inverse_kernel, "--inverse");
                const space_ptr xy = pair_space();
                const coh_class e = parse_class_expr(kernel, xy);
                const coh_class inv = parse_class_expr(inverse_kernel, product(xy->second(), xy->first()));
                report = verify_isometry(e, inv, kernel + " / inverse " + inverse_kernel);
            } else {
                need(kernel, "--kernel");
                need(kernel2, "--kernel2");
                need(z_spec, "--z");
                const space_ptr x = resolve_space(x_spec), y = resolve_space(y_spec), z = resolve_space(z_spec);
                if (suite == "composition") {
                    report = verify_composition(parse_class_expr(kernel, product(x, y)),
                                                parse_class_expr(kernel2, product(y, z)),
                                                "mu=" + kernel + "; nu=" + kernel2);
                } else {
                    report = functoriality_check(parse_kexpr(kernel, product(x, y)), parse_kexpr(kernel2, product(y, z)));
                }
            }
            print_report(report);
            return report.passed() ? ok : check_failed;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: missing " << e.what() << "\n";
        return usage;
    } catch (const file_missing& e) {
        std::cerr << "error: " << e.what() << "\n";
        return file_not_found;
    } catch (const malformed_space& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_space_file;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return syntax;
    } catch (const space_mismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return mismatch;
    } catch (const not_a_product& e) {
        std::cerr << "error: " << e.what() << "\n";
        return mismatch;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return math;
    }
    return usage;
}
