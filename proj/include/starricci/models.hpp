#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "starricci/frame.hpp"

/// Shape operators, connection data and the model-space catalog: the
/// homogeneous Hopf hypersurfaces of the complex hyperbolic and projective
/// planes, plus generic non-Hopf frame data on the open set where the
/// structure vector field fails to be principal.
namespace starricci {

/// Residual of the Hopf principal-curvature relation
/// lambda*nu = (alpha/2)(lambda+nu) + c/4. Zero for every Hopf hypersurface
/// whose holomorphic principal curvatures along (W, phi W) are lambda, nu.
inline double hopf_relation_residual(double alpha, double lambda, double nu, double c) {
    return lambda * nu - (alpha / 2.0) * (lambda + nu) - c / 4.0;
}

/// Second holomorphic principal curvature of a Hopf hypersurface from the
/// first: nu = (lambda*alpha/2 + c/4) / (lambda - alpha/2). The resulting
/// triple satisfies the Hopf relation exactly.
inline double compute_nu(double alpha, double lambda, double c, double eps = kIdentityTol) {
    const double denom = lambda - alpha / 2.0;
    if (std::fabs(denom) <= eps)
        throw std::domain_error("nu undetermined by the Hopf relation (lambda = alpha/2)");
    return (lambda * alpha / 2.0 + c / 4.0) / denom;
}

/// Catalog tags. Hyperbolic kinds follow the three-dimensional classification
/// of homogeneous Hopf hypersurfaces (horosphere, geodesic hypersphere, tube
/// over a complex hyperbolic line, tube over a real form); projective kinds
/// are the geodesic hypersphere, the complementary tube over a complex
/// projective line, and the tube over a real projective plane. AbstractHopf
/// carries user-supplied principal curvatures.
enum class HopfKind { A0, A11, A12, BHyp, A1Proj, A2Proj, BProj, AbstractHopf };

inline std::string kind_id(HopfKind kind) {
    switch (kind) {
        case HopfKind::A0: return "a0";
        case HopfKind::A11: return "a11";
        case HopfKind::A12: return "a12";
        case HopfKind::BHyp: return "b";
        case HopfKind::A1Proj: return "a1";
        case HopfKind::A2Proj: return "a2";
        case HopfKind::BProj: return "b";
        case HopfKind::AbstractHopf: return "abstract-hopf";
    }
    return "?";
}

/// A Hopf model: ambient space, catalog tag, optional tube radius, principal
/// curvatures (alpha along xi; lambda, nu along the holomorphic distribution)
/// and the xi-direction derivatives of lambda and nu (zero for every catalog
/// model; free on AbstractHopf).
struct HopfModel {
    AmbientSpace space;
    HopfKind kind;
    std::optional<double> radius;
    double alpha = 0.0;
    double lambda = 0.0;
    double nu = 0.0;
    double xi_d_lambda = 0.0;
    double xi_d_nu = 0.0;

    double hopf_residual() const { return hopf_relation_residual(alpha, lambda, nu, space.c); }
};

/// Free-form Hopf data for any non-flat ambient curvature. Not gated by the
/// Hopf principal-curvature relation; it is the escape hatch for probing
/// arbitrary triples (alpha, lambda, nu) and nonzero xi-derivatives.
inline HopfModel abstract_hopf(const AmbientSpace& space, double alpha, double lambda, double nu,
                               double xi_d_lambda = 0.0, double xi_d_nu = 0.0) {
    return HopfModel{space, HopfKind::AbstractHopf, std::nullopt, alpha, lambda, nu,
                     xi_d_lambda, xi_d_nu};
}

namespace detail {

inline double coth(double x) { return 1.0 / std::tanh(x); }
inline double cot(double x) { return 1.0 / std::tan(x); }

inline void require_radius(const std::optional<double>& r, double lo, double hi,
                           const char* kind) {
    if (!r) throw std::domain_error(std::string(kind) + ": radius required");
    if (!(*r > lo) || !(*r < hi))
        throw std::domain_error(std::string(kind) + ": radius out of domain");
}

}  // namespace detail

/// Construct a catalog model. Hyperbolic kinds take their curvatures from the
/// three-dimensional eigenvalue table (alpha, lambda, nu as tanh/coth of the
/// radius); projective kinds fix alpha = 2cot(2r) and the distinguished
/// curvature lambda, and derive nu through compute_nu. Every constructed
/// model must satisfy the Hopf relation to 1e-10 or construction fails, which
/// guards against a wrong curvature formula.
inline HopfModel catalog_model(const AmbientSpace& space, HopfKind kind,
                               std::optional<double> radius = std::nullopt) {
    constexpr double kGateTol = 1e-10;
    const double c = space.c;
    HopfModel m{space, kind, radius, 0.0, 0.0, 0.0, 0.0, 0.0};

    auto require_space = [&](double expect, const char* what) {
        if (c != expect)
            throw std::domain_error(std::string(what) +
                                    ": kind is defined for ambient curvature c = " +
                                    (expect > 0 ? std::string("4") : std::string("-4")));
    };

    switch (kind) {
        case HopfKind::A0:
            // Horosphere: the constant limit of the geodesic hypersphere family.
            require_space(-4.0, "a0");
            if (radius) throw std::domain_error("a0: horosphere has no radius parameter");
            m.alpha = 2.0;
            m.lambda = m.nu = 1.0;
            break;
        case HopfKind::A11: {
            require_space(-4.0, "a11");
            detail::require_radius(radius, 0.0, std::numeric_limits<double>::infinity(), "a11");
            const double r = *radius;
            m.alpha = 2.0 * detail::coth(2.0 * r);
            m.lambda = m.nu = detail::coth(r);
            break;
        }
        case HopfKind::A12: {
            require_space(-4.0, "a12");
            detail::require_radius(radius, 0.0, std::numeric_limits<double>::infinity(), "a12");
            const double r = *radius;
            m.alpha = 2.0 * detail::coth(2.0 * r);
            m.lambda = m.nu = std::tanh(r);
            break;
        }
        case HopfKind::BHyp: {
            require_space(-4.0, "b");
            detail::require_radius(radius, 0.0, std::numeric_limits<double>::infinity(), "b");
            const double r = *radius;
            m.alpha = 2.0 * std::tanh(2.0 * r);
            m.lambda = std::tanh(r);
            m.nu = detail::coth(r);
            break;
        }
        case HopfKind::A1Proj: {
            require_space(4.0, "a1");
            detail::require_radius(radius, 0.0, M_PI / 2.0, "a1");
            const double r = *radius;
            m.alpha = 2.0 * detail::cot(2.0 * r);
            m.lambda = detail::cot(r);
            m.nu = compute_nu(m.alpha, m.lambda, c);
            break;
        }
        case HopfKind::A2Proj: {
            // Complementary tube over a complex projective line; the
            // distinguished holomorphic curvature is -tan(r).
            require_space(4.0, "a2");
            detail::require_radius(radius, 0.0, M_PI / 2.0, "a2");
            const double r = *radius;
            m.alpha = 2.0 * detail::cot(2.0 * r);
            m.lambda = -std::tan(r);
            m.nu = compute_nu(m.alpha, m.lambda, c);
            break;
        }
        case HopfKind::BProj: {
            require_space(4.0, "b");
            detail::require_radius(radius, 0.0, M_PI / 4.0, "b");
            const double r = *radius;
            m.alpha = 2.0 * detail::cot(2.0 * r);
            m.lambda = detail::cot(r - M_PI / 4.0);
            m.nu = compute_nu(m.alpha, m.lambda, c);
            break;
        }
        case HopfKind::AbstractHopf:
            throw std::domain_error(
                "abstract-hopf: not a catalog kind, construct it with abstract_hopf()");
    }

    // Scale-aware gate: a wrong curvature formula shows up at the size of the
    // relation's terms, while extreme radii (coth ~ 1e6) carry matching
    // rounding noise that an absolute test would misread.
    const double scale = std::max({1.0, std::fabs(m.lambda * m.nu),
                                   std::fabs(m.alpha / 2.0 * (m.lambda + m.nu))});
    if (std::fabs(m.hopf_residual()) > kGateTol * scale)
        throw std::logic_error(kind_id(kind) +
                               ": catalog curvatures violate the Hopf relation "
                               "(wrong curvature formula)");
    return m;
}

/// Shape operator of a Hopf model in the frame (W, phi W, xi):
/// AW = lambda W, A phi W = nu phi W, A xi = alpha xi.
inline FrameOperator shape_hopf(const HopfModel& m) {
    return FrameOperator::diagonal(m.lambda, m.nu, m.alpha);
}

/// The scalar data of a non-Hopf frame (U, phi U, xi): principal-curvature
/// scalars alpha..mu, connection scalars kappa1..kappa3, and a table of
/// directional derivatives of the five curvature scalars (default zero).
struct NonHopfFrameData {
    enum class Direction { E1 = 0, E2 = 1, Xi = 2 };
    enum class Scalar { Alpha = 0, Beta = 1, Gamma = 2, Delta = 3, Mu = 4 };

    double alpha = 0.0;
    double beta = 0.0;  // must be nonzero: the defining property of the non-Hopf set
    double gamma = 0.0;
    double delta = 0.0;
    double mu = 0.0;
    double kappa1 = 0.0;
    double kappa2 = 0.0;
    double kappa3 = 0.0;

    std::array<std::array<double, 5>, 3> derivs{};  // [direction][scalar]

    double deriv(Direction d, Scalar s) const {
        return derivs[static_cast<std::size_t>(d)][static_cast<std::size_t>(s)];
    }
    void set_deriv(Direction d, Scalar s, double value) {
        derivs[static_cast<std::size_t>(d)][static_cast<std::size_t>(s)] = value;
    }
};

/// Shape operator of non-Hopf frame data:
/// AU = gamma U + delta phi U + beta xi, A phi U = delta U + mu phi U,
/// A xi = alpha xi + beta U. Rejects beta = 0 (use a HopfModel instead).
inline FrameOperator shape_nonhopf(const NonHopfFrameData& d) {
    if (d.beta == 0.0)
        throw std::invalid_argument("non-Hopf frame data requires beta != 0");
    return FrameOperator::from_columns({d.gamma, d.delta, d.beta}, {d.delta, d.mu, 0.0},
                                       {d.beta, 0.0, d.alpha});
}

/// Covariant derivatives of the frame along xi.
struct ConnectionAlongXi {
    FrameVector d_e1;  // nabla_xi e1
    FrameVector d_e2;  // nabla_xi e2
    FrameVector d_xi;  // nabla_xi xi

    FrameVector operator[](std::size_t i) const {
        return i == 0 ? d_e1 : (i == 1 ? d_e2 : d_xi);
    }

    /// g(nabla_xi e_i, e_j) + g(e_i, nabla_xi e_j); zero for a metric connection.
    double metric_compatibility_residual() const {
        double worst = 0.0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                worst = std::max(worst, std::fabs(g((*this)[i], frame_basis(j)) +
                                                  g(frame_basis(i), (*this)[j])));
        return worst;
    }
};

/// Non-Hopf connection along xi: nabla_xi U = kappa3 phi U,
/// nabla_xi phi U = -kappa3 U - beta xi, nabla_xi xi = beta phi U.
inline ConnectionAlongXi connection_along_xi_nonhopf(const NonHopfFrameData& d) {
    return ConnectionAlongXi{{0.0, d.kappa3, 0.0},
                             {-d.kappa3, 0.0, -d.beta},
                             {0.0, d.beta, 0.0}};
}

/// Hopf connection along xi with free gauge scalar kappa:
/// nabla_xi W = kappa phi W, nabla_xi phi W = -kappa W, nabla_xi xi = phi(A xi) = 0.
/// Metric compatibility only forces nabla_xi W to be orthogonal to W and xi,
/// so kappa is a gauge; every reported result must be kappa-independent.
inline ConnectionAlongXi connection_along_xi_hopf(const HopfModel&, double kappa = 0.0) {
    return ConnectionAlongXi{{0.0, kappa, 0.0}, {-kappa, 0.0, 0.0}, {0.0, 0.0, 0.0}};
}

/// Directional derivatives appearing in the scalar Codazzi equations.
struct CodazziDerivInputs {
    double xi_delta = 0.0;    // (xi) delta
    double phiU_alpha = 0.0;  // (phi U) alpha
    double phiU_beta = 0.0;   // (phi U) beta
    double U_delta = 0.0;     // (U) delta
    double phiU_gamma = 0.0;  // (phi U) gamma
};

/// LHS - RHS of the four scalar Codazzi equations of a non-Hopf frame:
///   xi(delta)              = alpha gamma + beta kappa1 + delta^2 + mu kappa3
///                            + c/4 - gamma mu - gamma kappa3 - beta^2
///   (phi U)(alpha)         = alpha beta + beta kappa3 - 3 beta mu
///   (phi U)(beta)          = alpha gamma + beta kappa1 + 2 delta^2 + c/2
///                            - 2 gamma mu + alpha mu
///   U(delta) - (phi U)(gamma) = mu kappa1 - kappa1 gamma - beta gamma
///                            - 2 delta kappa2 - 2 beta mu
/// The zero vector certifies Codazzi-consistent data.
inline std::array<double, 4> codazzi_residuals(const NonHopfFrameData& d,
                                               const CodazziDerivInputs& in, double c) {
    if (d.beta == 0.0)
        throw std::invalid_argument("non-Hopf frame data requires beta != 0");
    const double r1 = in.xi_delta - (d.alpha * d.gamma + d.beta * d.kappa1 + d.delta * d.delta +
                                     d.mu * d.kappa3 + c / 4.0 - d.gamma * d.mu -
                                     d.gamma * d.kappa3 - d.beta * d.beta);
    const double r2 = in.phiU_alpha - (d.alpha * d.beta + d.beta * d.kappa3 - 3.0 * d.beta * d.mu);
    const double r3 = in.phiU_beta - (d.alpha * d.gamma + d.beta * d.kappa1 +
                                      2.0 * d.delta * d.delta + c / 2.0 -
                                      2.0 * d.gamma * d.mu + d.alpha * d.mu);
    const double r4 = (in.U_delta - in.phiU_gamma) -
                      (d.mu * d.kappa1 - d.kappa1 * d.gamma - d.beta * d.gamma -
                       2.0 * d.delta * d.kappa2 - 2.0 * d.beta * d.mu);
    return {r1, r2, r3, r4};
}

}  // namespace starricci
