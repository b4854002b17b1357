#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "starricci/models.hpp"
#include "starricci/parallelism.hpp"

/// Radius scans over the model catalog and distinguished-radius solving.
namespace starricci {

inline std::string space_id(const AmbientSpace& space) { return space.c > 0 ? "cp2" : "ch2"; }

/// Legal radius interval of a catalog kind (open at both ends; hyperbolic
/// tubes are unbounded above).
struct RadiusDomain {
    bool has_radius = false;
    double lo = 0.0;
    double hi = 0.0;
};

inline RadiusDomain kind_radius_domain(HopfKind kind) {
    switch (kind) {
        case HopfKind::A0:
        case HopfKind::AbstractHopf: return {};
        case HopfKind::A11:
        case HopfKind::A12:
        case HopfKind::BHyp: return {true, 0.0, std::numeric_limits<double>::infinity()};
        case HopfKind::A1Proj:
        case HopfKind::A2Proj: return {true, 0.0, M_PI / 2.0};
        case HopfKind::BProj: return {true, 0.0, M_PI / 4.0};
    }
    return {};
}

/// Catalog kinds of one ambient space, in stable listing order.
inline std::vector<HopfKind> catalog_kinds(const AmbientSpace& space) {
    if (space.c < 0) return {HopfKind::A0, HopfKind::A11, HopfKind::A12, HopfKind::BHyp};
    return {HopfKind::A1Proj, HopfKind::A2Proj, HopfKind::BProj};
}

/// Resolve a kind identifier within one ambient space ("a0", "a11", "a12",
/// "b" hyperbolic; "a1", "a2", "b" projective; "abstract-hopf" either).
inline HopfKind parse_kind(const AmbientSpace& space, const std::string& id) {
    if (id == "abstract-hopf") return HopfKind::AbstractHopf;
    for (HopfKind kind : catalog_kinds(space))
        if (kind_id(kind) == id) return kind;
    throw std::domain_error("unknown kind '" + id + "' for space " + space_id(space));
}

namespace detail {

/// Signed vanishing function c + lambda(r) nu(r) of a radius-parametrized kind.
inline double signed_vanishing(const AmbientSpace& space, HopfKind kind, double r) {
    const HopfModel m = catalog_model(space, kind, r);
    return space.c + m.lambda * m.nu;
}

}  // namespace detail

/// Locate the radius at which the *-Ricci operator of a catalog kind
/// vanishes, by bisection of the signed function c + lambda(r) nu(r) over the
/// kind's radius domain. Throws when the kind carries no radius or the
/// condition is never attained (every hyperbolic kind except the geodesic
/// hypersphere, and every projective kind).
inline double solve_vanishing_radius(const AmbientSpace& space, HopfKind kind) {
    const RadiusDomain dom = kind_radius_domain(kind);
    if (!dom.has_radius)
        throw std::domain_error(kind_id(kind) +
                                ": no radius parameter; vanishing residual is constant");

    const double lo_edge = 1e-6;
    const double hi_edge = std::isinf(dom.hi) ? 25.0 : dom.hi - 1e-6;
    auto f = [&](double r) { return detail::signed_vanishing(space, kind, r); };

    // Bracket a sign change on a coarse grid, then bisect to machine precision.
    constexpr int kProbes = 512;
    double lo = lo_edge, hi = 0.0;
    double flo = f(lo);
    bool bracketed = false;
    for (int i = 1; i <= kProbes; ++i) {
        const double r = lo_edge + (hi_edge - lo_edge) * i / kProbes;
        const double fr = f(r);
        if (flo == 0.0 || flo * fr < 0.0) {
            hi = r;
            bracketed = true;
            break;
        }
        lo = r;
        flo = fr;
    }
    if (!bracketed)
        throw std::domain_error(kind_id(kind) + ": condition never attained for this kind");

    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0)
            hi = mid;
        else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

struct ScanRow {
    double radius = 0.0;
    ConditionReport report;
};

struct ScanRoot {
    std::string condition;
    double radius = 0.0;
    double residual = 0.0;
};

/// A radius scan of one catalog kind: per-radius condition reports plus the
/// isolated radii at which a condition's residual dips below threshold.
struct ScanResult {
    std::string space;
    std::string kind;
    double r_start = 0.0;
    double r_stop = 0.0;
    int count = 0;
    double epsilon = kConditionTol;
    std::vector<ScanRow> rows;
    std::vector<ScanRoot> roots;
};

namespace detail {

inline double condition_residual(const ConditionReport& rep, int which) {
    switch (which) {
        case 0: return rep.vanishing.residual;
        case 1: return rep.semi_parallel.residual;
        case 2: return rep.pseudo_parallel.residual;
        default: return rep.xi_parallel.residual;
    }
}

inline const char* condition_name(int which) {
    switch (which) {
        case 0: return "vanishing";
        case 1: return "semi_parallel";
        case 2: return "pseudo_parallel";
        default: return "xi_parallel";
    }
}

/// Shrink [lo, hi] onto the minimum of a unimodal residual function.
inline std::pair<double, double> refine_minimum(const std::function<double(double)>& f,
                                                double lo, double hi) {
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (m1 == lo || m2 == hi) break;
        if (f(m1) < f(m2))
            hi = m2;
        else
            lo = m1;
    }
    const double r = 0.5 * (lo + hi);
    return {r, f(r)};
}

}  // namespace detail

/// Classify a catalog kind over a uniform radius grid. Grid points are
/// evaluated in order; roots are isolated residual minima refined below the
/// threshold (a condition holding across the whole neighborhood is reported
/// in the rows, not as a root).
inline ScanResult run_scan(const AmbientSpace& space, HopfKind kind, double r_start,
                           double r_stop, int count, double eps = kConditionTol,
                           double kappa = 0.0) {
    if (count < 2) throw std::invalid_argument("scan requires at least 2 grid points");
    const RadiusDomain dom = kind_radius_domain(kind);
    if (!dom.has_radius)
        throw std::domain_error(kind_id(kind) + ": kind has no radius parameter to scan");
    if (!(r_start > dom.lo) || !(r_stop < dom.hi) || !(r_start < r_stop))
        throw std::domain_error(kind_id(kind) + ": scan interval outside the radius domain");

    ScanResult result;
    result.space = space_id(space);
    result.kind = kind_id(kind);
    result.r_start = r_start;
    result.r_stop = r_stop;
    result.count = count;
    result.epsilon = eps;

    const double step = (r_stop - r_start) / (count - 1);
    result.rows.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double r = r_start + step * i;
        result.rows.push_back({r, classify_hopf(catalog_model(space, kind, r), eps, kappa)});
    }

    for (int which = 0; which < 4; ++which) {
        auto residual_at = [&](double r) {
            return detail::condition_residual(classify_hopf(catalog_model(space, kind, r), eps, kappa),
                                              which);
        };
        auto res = [&](int i) { return detail::condition_residual(result.rows[i].report, which); };

        std::optional<ScanRoot> last;
        for (int i = 0; i < count; ++i) {
            const bool left_ok = i == 0 || res(i) <= res(i - 1);
            const bool right_ok = i == count - 1 || res(i) <= res(i + 1);
            if (!left_ok || !right_ok) continue;
            const int lo_i = std::max(0, i - 1);
            const int hi_i = std::min(count - 1, i + 1);
            // A plateau already below threshold is the condition holding, not
            // a crossing.
            if (res(lo_i) <= eps && res(i) <= eps && res(hi_i) <= eps) continue;
            auto [r_min, res_min] =
                detail::refine_minimum(residual_at, result.rows[lo_i].radius,
                                       result.rows[hi_i].radius);
            if (res_min > eps) continue;
            if (last && std::fabs(last->radius - r_min) < 2.0 * step) {
                if (res_min < last->residual) last = ScanRoot{detail::condition_name(which), r_min, res_min};
                continue;
            }
            if (last) result.roots.push_back(*last);
            last = ScanRoot{detail::condition_name(which), r_min, res_min};
        }
        if (last) result.roots.push_back(*last);
    }
    return result;
}

}  // namespace starricci
