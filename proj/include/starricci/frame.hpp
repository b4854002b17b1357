#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

/// Exact linear algebra over the 3-dimensional tangent frame of a real
/// hypersurface in a non-flat complex space form. The ordered orthonormal
/// frame is (e1, e2, xi) with e2 = phi(e1), so the metric is the Euclidean
/// dot product on coefficient triples and eta(X) is the third coefficient.
namespace starricci {

/// Default absolute tolerance for identity checks.
inline constexpr double kIdentityTol = 1e-9;

/// Residual threshold under which a parallelism condition is reported to hold.
inline constexpr double kConditionTol = 1e-8;

/// A tangent vector expressed by its coefficients in the frame (e1, e2, xi).
struct FrameVector {
    std::array<double, 3> coeffs{0.0, 0.0, 0.0};

    constexpr FrameVector() = default;
    constexpr FrameVector(double c1, double c2, double c3) : coeffs{c1, c2, c3} {}

    static constexpr FrameVector e1() { return {1.0, 0.0, 0.0}; }
    static constexpr FrameVector e2() { return {0.0, 1.0, 0.0}; }
    static constexpr FrameVector xi() { return {0.0, 0.0, 1.0}; }
    static constexpr FrameVector zero() { return {0.0, 0.0, 0.0}; }

    constexpr double operator[](std::size_t i) const { return coeffs[i]; }
    constexpr double& operator[](std::size_t i) { return coeffs[i]; }

    /// eta(X) = g(X, xi); the frame is adapted so this is the third coefficient.
    constexpr double eta() const { return coeffs[2]; }

    constexpr FrameVector operator+(const FrameVector& o) const {
        return {coeffs[0] + o.coeffs[0], coeffs[1] + o.coeffs[1], coeffs[2] + o.coeffs[2]};
    }
    constexpr FrameVector operator-(const FrameVector& o) const {
        return {coeffs[0] - o.coeffs[0], coeffs[1] - o.coeffs[1], coeffs[2] - o.coeffs[2]};
    }
    constexpr FrameVector operator-() const { return {-coeffs[0], -coeffs[1], -coeffs[2]}; }

    double norm_inf() const {
        return std::max({std::fabs(coeffs[0]), std::fabs(coeffs[1]), std::fabs(coeffs[2])});
    }
};

constexpr FrameVector operator*(double s, const FrameVector& v) {
    return {s * v[0], s * v[1], s * v[2]};
}
constexpr FrameVector operator*(const FrameVector& v, double s) { return s * v; }

/// Induced metric; the frame is orthonormal by construction.
constexpr double g(const FrameVector& x, const FrameVector& y) {
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

constexpr double eta(const FrameVector& x) { return x.eta(); }

inline FrameVector frame_basis(std::size_t i) {
    switch (i) {
        case 0: return FrameVector::e1();
        case 1: return FrameVector::e2();
        default: return FrameVector::xi();
    }
}

/// A (1,1)-tensor on the tangent frame: a 3x3 real matrix whose column j is
/// the image of frame vector j. Houses the shape operator A, the structure
/// tensor phi, the *-Ricci operator and the structure Jacobi operator.
struct FrameOperator {
    // entries[row][col]
    std::array<std::array<double, 3>, 3> entries{};

    constexpr FrameOperator() = default;

    static constexpr FrameOperator zero() { return {}; }

    static constexpr FrameOperator identity() {
        FrameOperator op;
        op.entries = {{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
        return op;
    }

    static constexpr FrameOperator diagonal(double d1, double d2, double d3) {
        FrameOperator op;
        op.entries[0][0] = d1;
        op.entries[1][1] = d2;
        op.entries[2][2] = d3;
        return op;
    }

    static constexpr FrameOperator from_columns(const FrameVector& c1, const FrameVector& c2,
                                                const FrameVector& c3) {
        FrameOperator op;
        for (std::size_t r = 0; r < 3; ++r) {
            op.entries[r][0] = c1[r];
            op.entries[r][1] = c2[r];
            op.entries[r][2] = c3[r];
        }
        return op;
    }

    constexpr double operator()(std::size_t row, std::size_t col) const {
        return entries[row][col];
    }
    constexpr double& operator()(std::size_t row, std::size_t col) { return entries[row][col]; }

    constexpr FrameVector column(std::size_t j) const {
        return {entries[0][j], entries[1][j], entries[2][j]};
    }

    constexpr FrameVector apply(const FrameVector& x) const {
        FrameVector y;
        for (std::size_t r = 0; r < 3; ++r)
            y[r] = entries[r][0] * x[0] + entries[r][1] * x[1] + entries[r][2] * x[2];
        return y;
    }

    /// this after other: (compose(B))(X) = this(B(X)).
    constexpr FrameOperator compose(const FrameOperator& other) const {
        FrameOperator out;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t k = 0; k < 3; ++k)
                    out.entries[i][j] += entries[i][k] * other.entries[k][j];
        return out;
    }

    constexpr FrameOperator operator+(const FrameOperator& o) const {
        FrameOperator out;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) out.entries[i][j] = entries[i][j] + o.entries[i][j];
        return out;
    }

    constexpr FrameOperator operator-(const FrameOperator& o) const {
        FrameOperator out;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) out.entries[i][j] = entries[i][j] - o.entries[i][j];
        return out;
    }

    constexpr FrameOperator scaled(double s) const {
        FrameOperator out;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) out.entries[i][j] = s * entries[i][j];
        return out;
    }

    constexpr FrameOperator transpose() const {
        FrameOperator out;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) out.entries[i][j] = entries[j][i];
        return out;
    }

    /// Max absolute entry; the norm used by every residual in the library.
    double operator_norm() const {
        double m = 0.0;
        for (const auto& row : entries)
            for (double v : row) m = std::max(m, std::fabs(v));
        return m;
    }

    bool is_symmetric(double tol = kIdentityTol) const {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                if (std::fabs(entries[i][j] - entries[j][i]) > tol) return false;
        return true;
    }
};

constexpr FrameOperator operator*(double s, const FrameOperator& op) { return op.scaled(s); }

inline FrameVector apply(const FrameOperator& op, const FrameVector& x) { return op.apply(x); }
inline FrameOperator compose(const FrameOperator& a, const FrameOperator& b) {
    return a.compose(b);
}
inline FrameOperator subtract(const FrameOperator& a, const FrameOperator& b) { return a - b; }
inline double operator_norm(const FrameOperator& op) { return op.operator_norm(); }

/// Rank-one operator Z -> g(y, Z) x.
constexpr FrameOperator outer(const FrameVector& x, const FrameVector& y) {
    FrameOperator op;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) op.entries[i][j] = x[i] * y[j];
    return op;
}

/// Structure tensor phi: e1 -> e2, e2 -> -e1, xi -> 0. Satisfies
/// phi^2 = -I + eta (x) xi and g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y).
constexpr FrameOperator phi_operator() {
    FrameOperator op;
    op.entries = {{{0.0, -1.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}}};
    return op;
}

/// Wedge endomorphism (X ^ Y)Z = g(Y,Z) X - g(X,Z) Y.
constexpr FrameVector wedge(const FrameVector& x, const FrameVector& y, const FrameVector& z) {
    return g(y, z) * x - g(x, z) * y;
}

/// The ambient complex space form, fixed by its constant holomorphic
/// sectional curvature c. Non-flat means c != 0; the two canonical choices
/// are c = 4 (complex projective plane) and c = -4 (complex hyperbolic plane).
struct AmbientSpace {
    double c;

    explicit AmbientSpace(double curvature) : c(curvature) {
        if (c == 0.0) throw std::invalid_argument("ambient space must be non-flat (c != 0)");
    }

    static AmbientSpace complex_projective() { return AmbientSpace(4.0); }
    static AmbientSpace complex_hyperbolic() { return AmbientSpace(-4.0); }
};

}  // namespace starricci
