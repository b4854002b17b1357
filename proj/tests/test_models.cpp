#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include "starricci/models.hpp"
#include "test_support.hpp"

using namespace starricci;

namespace {
const AmbientSpace kCH2 = AmbientSpace::complex_hyperbolic();
const AmbientSpace kCP2 = AmbientSpace::complex_projective();

// coth(r) = 2
constexpr double kVanishingRadius = 0.5493061443340548;

bool near(const FrameVector& a, const FrameVector& b, double tol = 1e-15) {
    return (a - b).norm_inf() <= tol;
}
}  // namespace

TEST_CASE("non-Hopf shape operator") {
    NonHopfFrameData d;
    d.beta = 1.0;
    const FrameOperator A = shape_nonhopf(d);
    CHECK(near(A.apply(FrameVector::e1()), FrameVector::xi()));
    CHECK(near(A.apply(FrameVector::e2()), FrameVector::zero()));
    CHECK(near(A.apply(FrameVector::xi()), FrameVector::e1()));

    d.gamma = 1.0;
    CHECK(near(shape_nonhopf(d).apply(FrameVector::e1()),
               FrameVector::e1() + FrameVector::xi()));

    SECTION("symmetry across random data") {
        auto gen = testsupport::rng(21);
        for (int n = 0; n < 200; ++n) {
            NonHopfFrameData r;
            r.alpha = testsupport::uniform(gen, -2.0, 2.0);
            r.beta = testsupport::uniform(gen, 0.1, 2.0);
            r.gamma = testsupport::uniform(gen, -2.0, 2.0);
            r.delta = testsupport::uniform(gen, -2.0, 2.0);
            r.mu = testsupport::uniform(gen, -2.0, 2.0);
            const FrameOperator op = shape_nonhopf(r);
            CHECK(op.is_symmetric(0.0));
            CHECK(g(op.apply(FrameVector::e1()), FrameVector::xi()) == r.beta);
            CHECK(g(op.apply(FrameVector::xi()), FrameVector::e1()) == r.beta);
        }
    }

    SECTION("beta = 0 is rejected") {
        NonHopfFrameData hopf_like;
        CHECK_THROWS_AS(shape_nonhopf(hopf_like), std::invalid_argument);
    }
}

TEST_CASE("Hopf shape operator") {
    const FrameOperator a0 = shape_hopf(catalog_model(kCH2, HopfKind::A0));
    CHECK(a0(0, 0) == 1.0);
    CHECK(a0(1, 1) == 1.0);
    CHECK(a0(2, 2) == 2.0);

    const double r = 0.9;
    const FrameOperator b = shape_hopf(catalog_model(kCH2, HopfKind::BHyp, r));
    CHECK(b(0, 0) == std::tanh(r));
    CHECK(b(1, 1) == 1.0 / std::tanh(r));
    CHECK(b(2, 2) == 2.0 * std::tanh(2.0 * r));

    const FrameOperator ab = shape_hopf(abstract_hopf(kCH2, 0.0, 1.0, -1.0));
    CHECK(ab(0, 0) == 1.0);
    CHECK(ab(1, 1) == -1.0);
    CHECK(ab(2, 2) == 0.0);
}

TEST_CASE("hyperbolic catalog") {
    SECTION("geodesic hypersphere with coth r = 2") {
        const HopfModel m = catalog_model(kCH2, HopfKind::A11, kVanishingRadius);
        CHECK(m.alpha == Catch::Approx(2.5).margin(1e-12));
        CHECK(m.lambda == Catch::Approx(2.0).margin(1e-12));
        CHECK(m.nu == m.lambda);
        CHECK(std::fabs(m.hopf_residual()) < 1e-12);
    }

    SECTION("type B has lambda nu = 1 at every radius") {
        for (double r : {0.2, 0.55, 0.9, 1.7, 3.1}) {
            const HopfModel m = catalog_model(kCH2, HopfKind::BHyp, r);
            CHECK(std::fabs(m.lambda * m.nu - 1.0) < 1e-15);
        }
    }

    SECTION("horosphere row") {
        const HopfModel m = catalog_model(kCH2, HopfKind::A0);
        CHECK(m.alpha == 2.0);
        CHECK(m.lambda == 1.0);
        CHECK(m.nu == 1.0);
        // 1 = (2/2)(1+1) - 1
        CHECK(m.hopf_residual() == 0.0);
    }

    SECTION("Hopf relation across a radius grid") {
        for (HopfKind kind : {HopfKind::A11, HopfKind::A12, HopfKind::BHyp})
            for (int i = 0; i < 120; ++i) {
                const double r = 0.03 + 0.035 * i;
                CHECK(std::fabs(catalog_model(kCH2, kind, r).hopf_residual()) < 1e-10);
            }
    }

    SECTION("domain errors") {
        CHECK_THROWS_AS(catalog_model(kCH2, HopfKind::A11, -1.0), std::domain_error);
        CHECK_THROWS_AS(catalog_model(kCH2, HopfKind::A11), std::domain_error);
        CHECK_THROWS_AS(catalog_model(kCH2, HopfKind::A0, 0.5), std::domain_error);
        CHECK_THROWS_AS(catalog_model(kCH2, HopfKind::A1Proj, 0.5), std::domain_error);
        CHECK_THROWS_AS(catalog_model(kCH2, HopfKind::AbstractHopf), std::domain_error);
    }
}

TEST_CASE("projective catalog") {
    SECTION("geodesic hypersphere at r = pi/4") {
        const HopfModel m = catalog_model(kCP2, HopfKind::A1Proj, M_PI / 4.0);
        CHECK(std::fabs(m.alpha) < 1e-15);
        CHECK(m.lambda == Catch::Approx(1.0).margin(1e-15));
        CHECK(m.nu == Catch::Approx(1.0).margin(1e-14));
    }

    SECTION("complementary tube carries -tan r on the holomorphic distribution") {
        const double r = 0.6;
        const HopfModel m = catalog_model(kCP2, HopfKind::A2Proj, r);
        CHECK(m.lambda == -std::tan(r));
        CHECK(m.nu == Catch::Approx(-std::tan(r)).margin(1e-13));
        CHECK(std::fabs(m.hopf_residual()) < 1e-12);
    }

    SECTION("real-form tube at r = 0.5, frozen curvatures") {
        const HopfModel m = catalog_model(kCP2, HopfKind::BProj, 0.5);
        CHECK(m.alpha == Catch::Approx(1.2841852318686614).margin(1e-13));
        CHECK(m.lambda == Catch::Approx(-3.4082234423358278).margin(1e-12));
        CHECK(m.nu == Catch::Approx(0.2934079930260234).margin(1e-13));
        CHECK(m.nu == Catch::Approx(-std::tan(0.5 - M_PI / 4.0)).margin(1e-13));
    }

    SECTION("Hopf relation across the projective grids") {
        for (int i = 0; i < 100; ++i) {
            const double r = 0.05 + (1.45 - 0.05) * i / 99.0;
            CHECK(std::fabs(catalog_model(kCP2, HopfKind::A1Proj, r).hopf_residual()) < 1e-10);
            CHECK(std::fabs(catalog_model(kCP2, HopfKind::A2Proj, r).hopf_residual()) < 1e-10);
            const double rb = 0.02 + (0.76 - 0.02) * i / 99.0;
            CHECK(std::fabs(catalog_model(kCP2, HopfKind::BProj, rb).hopf_residual()) < 1e-10);
        }
    }

    SECTION("radius domain") {
        CHECK_THROWS_AS(catalog_model(kCP2, HopfKind::A1Proj, M_PI / 2.0), std::domain_error);
        CHECK_THROWS_AS(catalog_model(kCP2, HopfKind::BProj, 1.0), std::domain_error);
        CHECK_THROWS_AS(catalog_model(kCP2, HopfKind::A11, 0.5), std::domain_error);
    }
}

TEST_CASE("second principal curvature from the Hopf relation") {
    CHECK(compute_nu(2.5, 2.0, -4.0) == Catch::Approx(2.0).margin(1e-15));
    CHECK(compute_nu(0.0, 1.0, -4.0) == Catch::Approx(-1.0).margin(1e-15));
    CHECK_THROWS_AS(compute_nu(2.0, 1.0, -4.0), std::domain_error);

    SECTION("round trip through the relation") {
        auto gen = testsupport::rng(22);
        for (int n = 0; n < 500; ++n) {
            const double alpha = testsupport::uniform(gen, -2.0, 2.0);
            const double lambda = testsupport::uniform(gen, -2.0, 2.0);
            if (std::fabs(lambda - alpha / 2.0) < 0.05) continue;
            const double c = n % 2 ? 4.0 : -4.0;
            const double nu = compute_nu(alpha, lambda, c);
            CHECK(std::fabs(hopf_relation_residual(alpha, lambda, nu, c)) < 1e-12);
        }
    }
}

TEST_CASE("connection along xi, non-Hopf frame") {
    NonHopfFrameData d;
    d.beta = 1.0;
    d.kappa3 = 0.0;
    ConnectionAlongXi conn = connection_along_xi_nonhopf(d);
    CHECK(near(conn.d_e1, FrameVector::zero()));
    CHECK(near(conn.d_xi, FrameVector::e2()));

    d.kappa3 = 2.0;
    d.beta = 0.5;
    conn = connection_along_xi_nonhopf(d);
    CHECK(near(conn.d_e2, -2.0 * FrameVector::e1() - 0.5 * FrameVector::xi()));

    SECTION("metric compatibility for random scalars") {
        auto gen = testsupport::rng(23);
        for (int n = 0; n < 200; ++n) {
            NonHopfFrameData r;
            r.beta = testsupport::uniform(gen, -2.0, 2.0);
            r.kappa3 = testsupport::uniform(gen, -2.0, 2.0);
            CHECK(connection_along_xi_nonhopf(r).metric_compatibility_residual() == 0.0);
        }
    }
}

TEST_CASE("connection along xi, Hopf frame") {
    const HopfModel m = catalog_model(kCH2, HopfKind::A11, 0.8);
    const ConnectionAlongXi rest = connection_along_xi_hopf(m, 0.0);
    CHECK(near(rest.d_e1, FrameVector::zero()));
    CHECK(near(rest.d_e2, FrameVector::zero()));
    CHECK(near(rest.d_xi, FrameVector::zero()));

    for (double kappa : {0.7, -1.3, 4.0}) {
        const ConnectionAlongXi conn = connection_along_xi_hopf(m, kappa);
        CHECK(conn.metric_compatibility_residual() == 0.0);
        CHECK(near(conn.d_xi, FrameVector::zero()));
    }
}

TEST_CASE("scalar Codazzi residuals") {
    SECTION("frozen single-scalar case") {
        NonHopfFrameData d;
        d.beta = 1.0;
        CodazziDerivInputs in;
        in.xi_delta = -2.0;  // c/4 - beta^2 at c = -4
        const auto res = codazzi_residuals(d, in, -4.0);
        CHECK(res[0] == 0.0);
    }

    SECTION("constructed fixed points have zero residual") {
        auto gen = testsupport::rng(24);
        for (int n = 0; n < 200; ++n) {
            NonHopfFrameData d;
            d.alpha = testsupport::uniform(gen, -2.0, 2.0);
            d.beta = testsupport::uniform(gen, 0.1, 2.0);
            d.gamma = testsupport::uniform(gen, -2.0, 2.0);
            d.delta = testsupport::uniform(gen, -2.0, 2.0);
            d.mu = testsupport::uniform(gen, -2.0, 2.0);
            d.kappa1 = testsupport::uniform(gen, -2.0, 2.0);
            d.kappa2 = testsupport::uniform(gen, -2.0, 2.0);
            d.kappa3 = testsupport::uniform(gen, -2.0, 2.0);
            const double c = n % 2 ? 4.0 : -4.0;

            CodazziDerivInputs in;
            in.xi_delta = d.alpha * d.gamma + d.beta * d.kappa1 + d.delta * d.delta +
                          d.mu * d.kappa3 + c / 4.0 - d.gamma * d.mu - d.gamma * d.kappa3 -
                          d.beta * d.beta;
            in.phiU_alpha = d.alpha * d.beta + d.beta * d.kappa3 - 3.0 * d.beta * d.mu;
            in.phiU_beta = d.alpha * d.gamma + d.beta * d.kappa1 + 2.0 * d.delta * d.delta +
                           c / 2.0 - 2.0 * d.gamma * d.mu + d.alpha * d.mu;
            in.U_delta = testsupport::uniform(gen, -2.0, 2.0);
            in.phiU_gamma = in.U_delta - (d.mu * d.kappa1 - d.kappa1 * d.gamma -
                                          d.beta * d.gamma - 2.0 * d.delta * d.kappa2 -
                                          2.0 * d.beta * d.mu);
            for (double r : codazzi_residuals(d, in, c)) CHECK(std::fabs(r) < 1e-13);
        }
    }

    SECTION("delta = mu = 0 with alpha gamma = beta^2 reduces the first equation") {
        auto gen = testsupport::rng(25);
        for (int n = 0; n < 200; ++n) {
            NonHopfFrameData d;
            d.beta = testsupport::uniform(gen, 0.2, 2.0);
            d.gamma = testsupport::uniform(gen, 0.2, 2.0);
            d.alpha = d.beta * d.beta / d.gamma;
            d.kappa1 = testsupport::uniform(gen, -2.0, 2.0);
            d.kappa3 = testsupport::uniform(gen, -2.0, 2.0);
            const double c = n % 2 ? 4.0 : -4.0;
            const auto res = codazzi_residuals(d, CodazziDerivInputs{}, c);
            const double reduced = d.gamma * d.kappa3 - d.beta * d.kappa1 - c / 4.0;
            CHECK(res[0] == Catch::Approx(reduced).margin(1e-13));
        }
    }
}
