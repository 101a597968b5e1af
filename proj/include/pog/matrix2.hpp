#pragma once

// Dense 2x2 complex matrices and Bloch-vector helpers: qubit states,
// unsharp two-outcome effects, the matching square-root Kraus pairs, and
// the non-selective state update averaged over three measurement axes.

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

namespace pog {

using cplx = std::complex<double>;

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& u, const Vec3& v) {
    return u.x * v.x + u.y * v.y + u.z * v.z;
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3& v) {
    const double n = norm(v);
    if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
    return v * (1.0 / n);
}

// Row-major 2x2 complex matrix [[a, b], [c, d]].
struct Mat2 {
    cplx a{0.0, 0.0};
    cplx b{0.0, 0.0};
    cplx c{0.0, 0.0};
    cplx d{0.0, 0.0};

    Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator*(double s) const { return {a * s, b * s, c * s, d * s}; }
};

// Domain vocabulary: the same dense type plays all three roles.
using ComplexMatrix2 = Mat2;
using QubitState = Mat2;
using BlochVector = Vec3;

inline Mat2 operator*(double s, const Mat2& m) { return m * s; }

inline Mat2 identity2() { return {1.0, 0.0, 0.0, 1.0}; }

inline Mat2 adjoint(const Mat2& m) {
    return {std::conj(m.a), std::conj(m.c), std::conj(m.b), std::conj(m.d)};
}

inline cplx trace(const Mat2& m) { return m.a + m.d; }

// n . sigma for a real vector n (not necessarily unit length).
inline Mat2 pauli_dot(const Vec3& n) {
    return {cplx{n.z, 0.0}, cplx{n.x, -n.y},
            cplx{n.x, n.y}, cplx{-n.z, 0.0}};
}

// Density matrix (I + r . sigma) / 2. Rejects unphysical |r| > 1.
inline Mat2 bloch_to_state(const Vec3& r) {
    if (norm(r) > 1.0 + 1e-12) throw std::domain_error("Bloch vector longer than 1");
    return 0.5 * (identity2() + pauli_dot(r));
}

// Inverse of bloch_to_state for a Hermitian unit-trace matrix.
inline Vec3 state_to_bloch(const Mat2& m) {
    return {2.0 * m.b.real(), -2.0 * m.b.imag(), (m.a - m.d).real()};
}

// Eigenvalues (min, max) of a Hermitian 2x2 matrix:
// lambda = mean(diag) -/+ sqrt(((a-d)/2)^2 + |b|^2), exact for Hermitian
// input. Rejects matrices that are not Hermitian within 1e-10.
inline std::pair<double, double> hermitian_eigenvalues(const Mat2& m) {
    constexpr double herm_tol = 1e-10;
    if (std::abs(m.a.imag()) > herm_tol || std::abs(m.d.imag()) > herm_tol ||
        std::abs(m.b - std::conj(m.c)) > herm_tol) {
        throw std::invalid_argument("matrix is not Hermitian");
    }
    const double mean = 0.5 * (m.a.real() + m.d.real());
    const double half_gap = 0.5 * (m.a.real() - m.d.real());
    const double radius = std::sqrt(half_gap * half_gap + std::norm(m.b));
    return {mean - radius, mean + radius};
}

inline void require_unit_axis(const Vec3& axis) {
    if (std::abs(norm(axis) - 1.0) > 1e-12) throw std::invalid_argument("axis must be unit length");
}

inline void require_sharpness(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("sharpness must lie in [0, 1]");
}

// Two-outcome unsharp effects E(+/-) = (I +/- eta n . sigma) / 2 along a
// unit axis; eta in [0, 1] is the sharpness, eta = 1 the projective limit.
struct EffectPair {
    Mat2 e_plus;
    Mat2 e_minus;
};

inline EffectPair make_effects(const Vec3& axis, double eta) {
    require_unit_axis(axis);
    require_sharpness(eta);
    const Mat2 bias = (0.5 * eta) * pauli_dot(axis);
    return {0.5 * identity2() + bias, 0.5 * identity2() - bias};
}

// Square-root Kraus pair K(+/-) = alpha I +/- beta n . sigma implementing
// the effects above (K† K = E, completeness K+†K+ + K-†K- = I). alpha and
// beta are pinned by alpha^2 + beta^2 = 1/2 and eta = 4 alpha beta.
struct KrausPair {
    Mat2 k_plus;
    Mat2 k_minus;
    double alpha = 0.0;
    double beta = 0.0;
};

inline KrausPair make_kraus(const Vec3& axis, double eta) {
    require_unit_axis(axis);
    require_sharpness(eta);
    const double alpha = 0.5 * (std::sqrt(0.5 * (1.0 + eta)) + std::sqrt(0.5 * (1.0 - eta)));
    const double beta = 0.5 * (std::sqrt(0.5 * (1.0 + eta)) - std::sqrt(0.5 * (1.0 - eta)));
    const Mat2 ns = pauli_dot(axis);
    return {alpha * identity2() + beta * ns,
            alpha * identity2() - beta * ns,
            alpha, beta};
}

// Non-selective post-measurement state for a measurement setting chosen
// uniformly among three Kraus pairs:
//   (1/3) sum_y (K+ rho K+† + K- rho K-†).
inline Mat2 apply_kraus_average(const Mat2& rho, const std::array<KrausPair, 3>& triples) {
    Mat2 out{};
    for (const KrausPair& k : triples) {
        out = out + k.k_plus * rho * adjoint(k.k_plus) + k.k_minus * rho * adjoint(k.k_minus);
    }
    return (1.0 / 3.0) * out;
}

// Convenience: build the three Kraus pairs from axes and shared sharpness.
inline std::array<KrausPair, 3> make_kraus_triple(const std::array<Vec3, 3>& axes, double eta) {
    return {make_kraus(axes[0], eta), make_kraus(axes[1], eta), make_kraus(axes[2], eta)};
}

inline Mat2 apply_kraus_average(const Mat2& rho, const std::array<Vec3, 3>& axes, double eta) {
    return apply_kraus_average(rho, make_kraus_triple(axes, eta));
}

// The same averaged update expressed directly on the Bloch vector:
//   r' = 2 (alpha^2 - beta^2) r + (4 beta^2 / 3) sum_y (b_y . r) b_y,
// with 2(alpha^2 - beta^2) = sqrt(1 - eta^2) and 4 beta^2 = 1 - sqrt(1 - eta^2).
// Kept as an independent route so matrix and Bloch evolutions can be
// cross-checked against each other; for states in the plane of three
// symmetric axes it reduces to an isotropic shrink by (1 + sqrt(1-eta^2))/2.
inline Vec3 bloch_update_average(const Vec3& r, const std::array<Vec3, 3>& axes, double eta) {
    require_sharpness(eta);
    const double root = std::sqrt(std::max(0.0, 1.0 - eta * eta));
    const double keep = root;
    const double pull = (1.0 - root) / 3.0;
    Vec3 out = keep * r;
    for (const Vec3& n : axes) out = out + pull * dot(n, r) * n;
    return out;
}

// Overlap Tr[target rho] with a pure target state (larger eigenvalue 1
// within 1e-10; rejected otherwise).
inline double fidelity_pure_target(const Mat2& target, const Mat2& rho) {
    const auto [lo, hi] = hermitian_eigenvalues(target);
    if (std::abs(hi - 1.0) > 1e-10 || std::abs(lo) > 1e-10) {
        throw std::invalid_argument("target state is not pure");
    }
    return trace(target * rho).real();
}

}  // namespace pog
