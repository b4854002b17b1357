// Command-line front end: catalog listing, single-model classification,
// radius scans, distinguished-radius solving, and the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "starricci/starricci.hpp"

namespace {

using namespace starricci;

AmbientSpace parse_space(const std::string& id) {
    if (id == "ch2" || id == "chh2") return AmbientSpace::complex_hyperbolic();
    if (id == "cp2" || id == "cpp2") return AmbientSpace::complex_projective();
    throw std::domain_error("unknown space '" + id + "' (expected ch2 or cp2)");
}

struct CatalogLine {
    const char* space;
    const char* kind;
    const char* domain;
    const char* curvatures;
};

constexpr CatalogLine kCatalogLines[] = {
    {"ch2", "a0", "-", "alpha = 2, lambda = nu = 1 (horosphere)"},
    {"ch2", "a11", "r > 0", "alpha = 2coth(2r), lambda = nu = coth(r) (geodesic hypersphere)"},
    {"ch2", "a12", "r > 0",
     "alpha = 2coth(2r), lambda = nu = tanh(r) (tube over a complex hyperbolic line)"},
    {"ch2", "b", "r > 0",
     "alpha = 2tanh(2r), lambda = tanh(r), nu = coth(r) (tube over a real hyperbolic plane)"},
    {"cp2", "a1", "0 < r < pi/2",
     "alpha = 2cot(2r), lambda = nu = cot(r) (geodesic hypersphere)"},
    {"cp2", "a2", "0 < r < pi/2",
     "alpha = 2cot(2r), lambda = nu = -tan(r) (tube over a complex projective line)"},
    {"cp2", "b", "0 < r < pi/4",
     "alpha = 2cot(2r), lambda = cot(r - pi/4), nu = cot(r + pi/4) (tube over a real "
     "projective plane)"},
    {"any", "abstract-hopf", "-",
     "user-supplied alpha, lambda, nu and xi-derivatives of lambda, nu"},
};

int cmd_catalog(const std::string& space_filter, const std::string& format) {
    if (format == "json") {
        std::string out = "{\"schema\":1,\"catalog\":[";
        bool first = true;
        for (const CatalogLine& line : kCatalogLines) {
            if (space_filter != "all" && space_filter != line.space &&
                std::string(line.space) != "any")
                continue;
            if (!first) out += ',';
            first = false;
            out += std::string("{\"space\":\"") + line.space + "\",\"kind\":\"" + line.kind +
                   "\",\"domain\":\"" + line.domain + "\",\"curvatures\":\"" + line.curvatures +
                   "\"}";
        }
        out += "]}";
        std::cout << out << '\n';
        return 0;
    }
    std::printf("%-5s %-14s %-14s %s\n", "space", "kind", "radius", "principal curvatures");
    for (const CatalogLine& line : kCatalogLines) {
        if (space_filter != "all" && space_filter != line.space &&
            std::string(line.space) != "any")
            continue;
        std::printf("%-5s %-14s %-14s %s\n", line.space, line.kind, line.domain,
                    line.curvatures);
    }
    return 0;
}

struct CheckArgs {
    std::string space = "ch2";
    std::string kind;
    std::optional<double> radius;
    std::optional<double> alpha, lambda, nu;
    double xi_d_lambda = 0.0;
    double xi_d_nu = 0.0;
    double kappa = 0.0;
    double epsilon = kConditionTol;
    std::string format = "table";
};

HopfModel build_model(const CheckArgs& args) {
    const AmbientSpace space = parse_space(args.space);
    const HopfKind kind = parse_kind(space, args.kind);
    if (kind == HopfKind::AbstractHopf) {
        if (!args.alpha || !args.lambda || !args.nu)
            throw std::domain_error(
                "abstract-hopf requires --alpha, --lambda and --nu");
        return abstract_hopf(space, *args.alpha, *args.lambda, *args.nu, args.xi_d_lambda,
                             args.xi_d_nu);
    }
    return catalog_model(space, kind, args.radius);
}

int cmd_check(const CheckArgs& args) {
    const HopfModel model = build_model(args);
    const ConditionReport report = classify_hopf(model, args.epsilon, args.kappa);
    if (args.format == "json")
        std::cout << render_report(report, model) << '\n';
    else
        std::cout << render_report_table(report, model);
    return 0;
}

struct ScanArgs {
    std::string space = "ch2";
    std::string kind;
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
    double kappa = 0.0;
    double epsilon = kConditionTol;
    std::string format = "table";
};

int cmd_scan(const ScanArgs& args) {
    const AmbientSpace space = parse_space(args.space);
    const ScanResult result = run_scan(space, parse_kind(space, args.kind), args.start,
                                       args.stop, args.count, args.epsilon, args.kappa);
    if (args.format == "json")
        std::cout << render_scan(result) << '\n';
    else
        std::cout << render_scan_table(result);
    return 0;
}

int cmd_solve(const std::string& space_id_str, const std::string& kind_str,
              const std::string& format) {
    const AmbientSpace space = parse_space(space_id_str);
    const HopfKind kind = parse_kind(space, kind_str);
    const double r = solve_vanishing_radius(space, kind);
    const HopfModel m = catalog_model(space, kind, r);
    const double residual = std::fabs(space.c + m.lambda * m.nu);
    if (format == "json")
        std::cout << "{\"schema\":1,\"space\":\"" << space_id(space) << "\",\"kind\":\""
                  << kind_id(kind) << "\",\"condition\":\"vanishing\",\"radius\":" << fmt_num(r)
                  << ",\"residual\":" << fmt_num(residual) << "}\n";
    else
        std::cout << "vanishing radius for " << space_id(space) << "/" << kind_id(kind) << ": "
                  << fmt_num(r) << " (residual " << fmt_num(residual) << ")\n";
    return 0;
}

int cmd_verify() {
    const std::vector<SuiteResult> results = run_all_suites();
    bool all_passed = true;
    for (const SuiteResult& suite : results) {
        all_passed = all_passed && suite.passed;
        std::printf("%s  %s  (max residual %s; %s)\n", suite.passed ? "PASS" : "FAIL",
                    suite.name.c_str(), fmt_num(suite.max_residual).c_str(),
                    suite.detail.c_str());
    }
    std::printf("verify: %zu/%zu suites passed\n",
                static_cast<std::size_t>(
                    std::count_if(results.begin(), results.end(),
                                  [](const SuiteResult& s) { return s.passed; })),
                results.size());
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Residual classifier for the *-Ricci parallelism conditions of "
        "three-dimensional real hypersurfaces in non-flat complex space forms"};
    app.require_subcommand(1);

    std::string catalog_space = "all";
    std::string catalog_format = "table";
    CLI::App* catalog = app.add_subcommand("catalog", "List the model catalog");
    catalog->add_option("--space", catalog_space, "ch2, cp2 or all")->capture_default_str();
    catalog->add_option("--format", catalog_format, "json or table")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();

    CheckArgs check_args;
    CLI::App* check = app.add_subcommand("check", "Classify a single model");
    check->add_option("--space", check_args.space, "ch2 or cp2")->capture_default_str();
    check->add_option("--kind", check_args.kind, "model kind id")->required();
    check->add_option("--radius", check_args.radius, "tube radius (catalog kinds)");
    check->add_option("--alpha", check_args.alpha, "abstract-hopf: principal curvature alpha");
    check->add_option("--lambda", check_args.lambda, "abstract-hopf: principal curvature lambda");
    check->add_option("--nu", check_args.nu, "abstract-hopf: principal curvature nu");
    check->add_option("--xi-dlambda", check_args.xi_d_lambda,
                      "abstract-hopf: xi-derivative of lambda");
    check->add_option("--xi-dnu", check_args.xi_d_nu, "abstract-hopf: xi-derivative of nu");
    check->add_option("--kappa", check_args.kappa, "connection gauge along xi");
    check->add_option("--epsilon", check_args.epsilon, "residual threshold")
        ->capture_default_str();
    check->add_option("--format", check_args.format, "json or table")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();

    ScanArgs scan_args;
    CLI::App* scan = app.add_subcommand("scan", "Classify a kind over a radius grid");
    scan->add_option("--space", scan_args.space, "ch2 or cp2")->capture_default_str();
    scan->add_option("--kind", scan_args.kind, "model kind id")->required();
    scan->add_option("--start", scan_args.start, "first radius")->required();
    scan->add_option("--stop", scan_args.stop, "last radius")->required();
    scan->add_option("--count", scan_args.count, "number of grid points (>= 2)")->required();
    scan->add_option("--kappa", scan_args.kappa, "connection gauge along xi");
    scan->add_option("--epsilon", scan_args.epsilon, "residual threshold")
        ->capture_default_str();
    scan->add_option("--format", scan_args.format, "json or table")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();

    std::string solve_space = "ch2";
    std::string solve_kind;
    std::string solve_format = "table";
    CLI::App* solve =
        app.add_subcommand("solve", "Solve for the radius where the *-Ricci operator vanishes");
    solve->add_option("--space", solve_space, "ch2 or cp2")->capture_default_str();
    solve->add_option("--kind", solve_kind, "model kind id")->required();
    solve->add_option("--format", solve_format, "json or table")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify", "Run every verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (catalog->parsed()) return cmd_catalog(catalog_space, catalog_format);
        if (check->parsed()) return cmd_check(check_args);
        if (scan->parsed()) return cmd_scan(scan_args);
        if (solve->parsed()) return cmd_solve(solve_space, solve_kind, solve_format);
        if (verify->parsed()) return cmd_verify();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
