#pragma once

#include <array>
#include <cstddef>

#include "starricci/frame.hpp"

/// Riemann curvature via the Gauss equation of a hypersurface in a complex
/// space form, the *-Ricci operator, and the structure Jacobi operator.
namespace starricci {

/// The curvature tensor evaluated on the frame: slot (i,j) holds the operator
/// Z -> R(e_i, e_j)Z. Antisymmetric in (i,j).
struct CurvatureTensor {
    std::array<std::array<FrameOperator, 3>, 3> ops{};

    const FrameOperator& operator()(std::size_t i, std::size_t j) const { return ops[i][j]; }

    /// Bilinear extension to arbitrary frame vectors.
    FrameVector apply(const FrameVector& x, const FrameVector& y, const FrameVector& z) const {
        FrameVector out;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                const double w = x[i] * y[j];
                if (w == 0.0) continue;
                out = out + w * ops[i][j].apply(z);
            }
        return out;
    }
};

/// Gauss equation for ambient holomorphic sectional curvature c:
/// R(X,Y)Z = (c/4)[ g(Y,Z)X - g(X,Z)Y + g(phi Y,Z) phi X - g(phi X,Z) phi Y
///                  - 2 g(phi X,Y) phi Z ] + g(AY,Z)AX - g(AX,Z)AY.
inline FrameVector gauss_curvature(const FrameOperator& A, double c, const FrameVector& x,
                                   const FrameVector& y, const FrameVector& z) {
    const FrameOperator phi = phi_operator();
    const FrameVector px = phi.apply(x);
    const FrameVector py = phi.apply(y);
    const FrameVector ax = A.apply(x);
    const FrameVector ay = A.apply(y);
    return (c / 4.0) * (g(y, z) * x - g(x, z) * y + g(py, z) * px - g(px, z) * py -
                        2.0 * g(px, y) * phi.apply(z)) +
           g(ay, z) * ax - g(ax, z) * ay;
}

/// Full frame-indexed curvature tensor of the hypersurface with shape
/// operator A. Deterministic (i,j)-ordering so condition modules can iterate
/// reproducibly over the 27 basis evaluations.
inline CurvatureTensor riemann(const FrameOperator& A, const AmbientSpace& space) {
    CurvatureTensor R;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            FrameOperator op;
            for (std::size_t k = 0; k < 3; ++k) {
                const FrameVector col =
                    gauss_curvature(A, space.c, frame_basis(i), frame_basis(j), frame_basis(k));
                for (std::size_t r = 0; r < 3; ++r) op(r, k) = col[r];
            }
            R.ops[i][j] = op;
        }
    return R;
}

/// *-Ricci operator S*X = -[ c phi^2 X + (phi A)^2 X ].
/// Not symmetric in general (S* xi can have holomorphic components while
/// S* e1 has no xi component); the engine must not symmetrize it.
inline FrameOperator star_ricci(const FrameOperator& A, const AmbientSpace& space) {
    const FrameOperator phi = phi_operator();
    const FrameOperator phiA = phi.compose(A);
    return (phi.compose(phi).scaled(space.c) + phiA.compose(phiA)).scaled(-1.0);
}

/// Structure Jacobi operator lX = R(X, xi)xi, evaluated through the full
/// curvature tensor.
inline FrameOperator structure_jacobi(const FrameOperator& A, const AmbientSpace& space) {
    const CurvatureTensor R = riemann(A, space);
    FrameOperator l;
    for (std::size_t i = 0; i < 3; ++i) {
        const FrameVector col = R.apply(frame_basis(i), FrameVector::xi(), FrameVector::xi());
        for (std::size_t r = 0; r < 3; ++r) l(r, i) = col[r];
    }
    return l;
}

/// Structure Jacobi operator in closed form,
/// lX = (c/4)(X - eta(X) xi) + alpha AX - g(X, A xi) A xi with
/// alpha = g(A xi, xi). Kept as an independent code path from the
/// curvature-tensor evaluation; the two must agree entry by entry.
inline FrameOperator structure_jacobi_direct(const FrameOperator& A, const AmbientSpace& space) {
    const FrameVector axi = A.apply(FrameVector::xi());
    const double alpha = g(axi, FrameVector::xi());
    const FrameOperator tangent_proj =
        FrameOperator::identity() - outer(FrameVector::xi(), FrameVector::xi());
    return tangent_proj.scaled(space.c / 4.0) + A.scaled(alpha) - outer(axi, axi);
}

}  // namespace starricci
