// Minimal library walkthrough: build the hyperbolic catalog at a fixed
// radius, classify each model, and locate the radius where the *-Ricci
// operator of the geodesic hypersphere vanishes.

#include <cstdio>

#include "starricci/starricci.hpp"

int main() {
    using namespace starricci;

    const AmbientSpace ch2 = AmbientSpace::complex_hyperbolic();

    std::printf("%-6s %-10s %-10s %-10s %-10s\n", "kind", "vanishing", "semi", "pseudo", "xi");
    for (HopfKind kind : catalog_kinds(ch2)) {
        const bool has_radius = kind_radius_domain(kind).has_radius;
        const HopfModel model =
            has_radius ? catalog_model(ch2, kind, 0.8) : catalog_model(ch2, kind);
        const ConditionReport report = classify_hopf(model);
        std::printf("%-6s %-10s %-10s %-10s %-10s\n", kind_id(kind).c_str(),
                    report.vanishing.holds ? "yes" : "no",
                    report.semi_parallel.holds ? "yes" : "no",
                    report.pseudo_parallel.holds ? "yes" : "no",
                    report.xi_parallel.holds ? "yes" : "no");
    }

    const double r = solve_vanishing_radius(ch2, HopfKind::A11);
    std::printf("\ngeodesic hypersphere with vanishing *-Ricci operator: r = %s (coth r = %s)\n",
                fmt_num(r).c_str(), fmt_num(1.0 / std::tanh(r)).c_str());
    return 0;
}
