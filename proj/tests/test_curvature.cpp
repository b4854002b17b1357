#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include "starricci/curvature.hpp"
#include "starricci/models.hpp"
#include "test_support.hpp"

using namespace starricci;

namespace {
const AmbientSpace kCH2 = AmbientSpace::complex_hyperbolic();
const AmbientSpace kCP2 = AmbientSpace::complex_projective();

bool near(const FrameVector& a, const FrameVector& b, double tol = 1e-14) {
    return (a - b).norm_inf() <= tol;
}
}  // namespace

TEST_CASE("curvature of the totally geodesic case") {
    // With A = 0 the four rotational terms stack up: R(e1,e2)e2 = (c/4) 4 e1.
    const CurvatureTensor R = riemann(FrameOperator::zero(), kCP2);
    CHECK(near(R(0, 1).column(1), 4.0 * FrameVector::e1()));
}

TEST_CASE("radial curvature of a Hopf model") {
    auto gen = testsupport::rng(31);
    for (int n = 0; n < 200; ++n) {
        const double alpha = testsupport::uniform(gen, -2.0, 2.0);
        const double lambda = testsupport::uniform(gen, -2.0, 2.0);
        const double nu = testsupport::uniform(gen, -2.0, 2.0);
        const AmbientSpace space(n % 2 ? 4.0 : -4.0);
        const CurvatureTensor R = riemann(FrameOperator::diagonal(lambda, nu, alpha), space);
        const double sectional = g(R.apply(FrameVector::e1(), FrameVector::xi(), FrameVector::xi()),
                                   FrameVector::e1());
        CHECK(sectional == Catch::Approx(space.c / 4.0 + alpha * lambda).margin(1e-13));
    }
}

TEST_CASE("curvature antisymmetry on random shape operators") {
    auto gen = testsupport::rng(32);
    for (int n = 0; n < 100; ++n) {
        const FrameOperator A = testsupport::random_symmetric(gen);
        const CurvatureTensor R = riemann(A, n % 2 ? kCP2 : kCH2);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK((R(i, j) + R(j, i)).operator_norm() < 1e-13);
    }
}

TEST_CASE("curvature matches the independent oracle") {
    auto gen = testsupport::rng(33);
    for (int n = 0; n < 100; ++n) {
        const FrameOperator A = testsupport::random_symmetric(gen);
        const double c = n % 2 ? 4.0 : -4.0;
        const CurvatureTensor R = riemann(A, AmbientSpace(c));
        const auto mat = testsupport::to_mat(A);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) {
                    const auto expect = testsupport::oracle_curvature(
                        mat, c, testsupport::basis(i), testsupport::basis(j),
                        testsupport::basis(k));
                    const FrameVector got = R(i, j).column(k);
                    for (int t = 0; t < 3; ++t)
                        CHECK(std::fabs(got[static_cast<std::size_t>(t)] - expect[t]) < 1e-13);
                }
    }
}

TEST_CASE("*-Ricci operator closed values") {
    SECTION("vanishing on the distinguished geodesic hypersphere") {
        const FrameOperator S =
            star_ricci(FrameOperator::diagonal(2.0, 2.0, 2.5), kCH2);
        CHECK(S.operator_norm() == 0.0);
    }

    SECTION("non-Hopf xi image") {
        NonHopfFrameData d;
        d.beta = 1.0;
        d.mu = 1.0;
        const FrameOperator S = star_ricci(shape_nonhopf(d), kCH2);
        CHECK(near(S.column(2), FrameVector::e1()));
    }

    SECTION("totally geodesic case") {
        const FrameOperator S = star_ricci(FrameOperator::zero(), kCP2);
        CHECK(near(S.column(0), 4.0 * FrameVector::e1()));
        CHECK(near(S.column(2), FrameVector::zero()));
    }

    SECTION("the operator is not symmetrized") {
        NonHopfFrameData d;
        d.beta = 1.2;
        d.mu = 0.9;
        d.delta = 0.4;
        const FrameOperator S = star_ricci(shape_nonhopf(d), kCH2);
        CHECK(std::fabs(S(0, 2)) > 0.5);   // S* xi leans into e1
        CHECK(S(2, 0) == 0.0);             // S* e1 has no xi component
    }
}

TEST_CASE("*-Ricci operator matches the trace-definition oracle") {
    auto gen = testsupport::rng(34);
    for (int n = 0; n < 200; ++n) {
        const FrameOperator A = testsupport::random_symmetric(gen);
        const double c = n % 2 ? 4.0 : -4.0;
        const FrameOperator S = star_ricci(A, AmbientSpace(c));
        const auto oracle = testsupport::oracle_star_ricci(testsupport::to_mat(A), c);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(std::fabs(S(i, j) - oracle[i][j]) < 1e-12);
    }
}

TEST_CASE("Hopf trace identity") {
    auto gen = testsupport::rng(35);
    for (int n = 0; n < 200; ++n) {
        const double alpha = testsupport::uniform(gen, -2.0, 2.0);
        const double lambda = testsupport::uniform(gen, -2.0, 2.0);
        const double nu = testsupport::uniform(gen, -2.0, 2.0);
        const double c = n % 2 ? 4.0 : -4.0;
        const FrameOperator S =
            star_ricci(FrameOperator::diagonal(lambda, nu, alpha), AmbientSpace(c));
        const double trace = S(0, 0) + S(1, 1) + S(2, 2);
        CHECK(trace == Catch::Approx(2.0 * (c + lambda * nu)).margin(1e-13));
    }
}

TEST_CASE("structure Jacobi operator") {
    SECTION("xi is always annihilated") {
        auto gen = testsupport::rng(36);
        for (int n = 0; n < 100; ++n) {
            const FrameOperator A = testsupport::random_symmetric(gen);
            CHECK(structure_jacobi(A, n % 2 ? kCP2 : kCH2).column(2).norm_inf() < 1e-13);
        }
    }

    SECTION("non-Hopf closed form") {
        auto gen = testsupport::rng(37);
        for (int n = 0; n < 200; ++n) {
            NonHopfFrameData d;
            d.alpha = testsupport::uniform(gen, -2.0, 2.0);
            d.beta = testsupport::uniform(gen, 0.1, 2.0);
            d.gamma = testsupport::uniform(gen, -2.0, 2.0);
            d.delta = testsupport::uniform(gen, -2.0, 2.0);
            d.mu = testsupport::uniform(gen, -2.0, 2.0);
            const double c = n % 2 ? 4.0 : -4.0;
            const FrameOperator l = structure_jacobi(shape_nonhopf(d), AmbientSpace(c));
            const double u_coeff = c / 4.0 + d.alpha * d.gamma - d.beta * d.beta;
            CHECK(near(l.column(0), {u_coeff, d.alpha * d.delta, 0.0}, 1e-13));
            const double phiu_coeff = c / 4.0 + d.alpha * d.mu;
            CHECK(near(l.column(1), {d.alpha * d.delta, phiu_coeff, 0.0}, 1e-13));
        }
    }

    SECTION("annihilated by the semi-parallel constraint chain") {
        NonHopfFrameData d;
        d.beta = 1.3;
        d.mu = 0.8;
        d.delta = 0.0;
        d.alpha = 1.0 / d.mu;           // c/4 + alpha mu = 0 at c = -4
        d.gamma = (d.beta * d.beta + 1.0) / d.alpha;  // c/4 + alpha gamma = beta^2
        CHECK(structure_jacobi(shape_nonhopf(d), kCH2).operator_norm() < 1e-15);
    }

    SECTION("Hopf diagonal form cross-checks the radial curvature") {
        const HopfModel m = catalog_model(kCH2, HopfKind::BHyp, 0.8);
        const FrameOperator l = structure_jacobi(shape_hopf(m), kCH2);
        CHECK(l(0, 0) == Catch::Approx(-1.0 + m.alpha * m.lambda).margin(1e-14));
        CHECK(l(1, 1) == Catch::Approx(-1.0 + m.alpha * m.nu).margin(1e-14));
        CHECK(l(2, 2) == 0.0);
    }

    SECTION("the two code paths agree") {
        auto gen = testsupport::rng(38);
        for (int n = 0; n < 300; ++n) {
            const FrameOperator A = testsupport::random_symmetric(gen);
            const AmbientSpace space(n % 2 ? 4.0 : -4.0);
            CHECK((structure_jacobi(A, space) - structure_jacobi_direct(A, space))
                      .operator_norm() < 1e-13);
        }
    }
}
