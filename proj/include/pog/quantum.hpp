#pragma once

// Quantum strategies for the game: the symmetric antipodal ("trine")
// preparations, unsharp measurements for a chain of up to three receivers
// acting on the same carrier, Born-rule success probabilities computed by
// full simulation, and the closed-form optima they are compared against.

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "pog/game.hpp"
#include "pog/matrix2.hpp"

namespace pog {

inline constexpr double kPi = 3.14159265358979323846;

inline void require_trine_angle(double theta) {
    if (!(theta >= 0.0 && theta <= kPi / 2.0 + 1e-12)) {
        throw std::invalid_argument("preparation angle must lie in [0, pi/2]");
    }
}

// Six pure preparations in the x-z plane: r_{10} = (1,0,0),
// r_{20} = (-cos t, 0, sin t), r_{30} = (-cos t, 0, -sin t), and the
// a = 1 states antipodal to the a = 0 ones. t = pi/3 gives the symmetric
// triple with pairwise overlaps -1/2.
inline PreparationSet trine_preparations(double theta) {
    require_trine_angle(theta);
    const std::array<Vec3, 3> r0 = {Vec3{1.0, 0.0, 0.0},
                                    Vec3{-std::cos(theta), 0.0, std::sin(theta)},
                                    Vec3{-std::cos(theta), 0.0, -std::sin(theta)}};
    std::array<Vec3, 6> r;
    for (int x = 1; x <= 3; ++x) {
        r[2 * (x - 1) + 0] = r0[x - 1];
        r[2 * (x - 1) + 1] = -r0[x - 1];
    }
    return preparation_set_from_bloch(r);
}

// Measurement directions anti-aligned with the a = 0 preparations,
// b_k = -r_{k0}; the winning output is then the "minus" outcome exactly
// when x = y, a = 0.
inline std::array<Vec3, 3> ideal_directions(double theta) {
    require_trine_angle(theta);
    return {Vec3{-1.0, 0.0, 0.0},
            Vec3{std::cos(theta), 0.0, -std::sin(theta)},
            Vec3{std::cos(theta), 0.0, std::sin(theta)}};
}

// Sharpness and measurement directions for the sequential receivers.
struct SequentialConfig {
    double eta_B = 1.0;
    double eta_C = 1.0;
    double eta_D = 1.0;
    std::array<Vec3, 3> b_axes{};
    std::array<Vec3, 3> c_axes{};
    std::array<Vec3, 3> d_axes{};
};

inline SequentialConfig ideal_sequential_config(double theta, double eta_B,
                                                double eta_C = 1.0, double eta_D = 1.0) {
    require_sharpness(eta_B);
    require_sharpness(eta_C);
    require_sharpness(eta_D);
    SequentialConfig cfg;
    cfg.eta_B = eta_B;
    cfg.eta_C = eta_C;
    cfg.eta_D = eta_D;
    cfg.b_axes = cfg.c_axes = cfg.d_axes = ideal_directions(theta);
    return cfg;
}

// The three signed difference vectors governing the first receiver's
// success: n_y = sum_x (-1)^{[x==y]} (r_{x0} - r_{x1}).
struct NVectors {
    Vec3 n1, n2, n3;

    double total_norm() const { return norm(n1) + norm(n2) + norm(n3); }
    double total_norm_squared() const { return dot(n1, n1) + dot(n2, n2) + dot(n3, n3); }
};

inline NVectors n_vectors(const PreparationSet& prep) {
    NVectors out{};
    Vec3* n[3] = {&out.n1, &out.n2, &out.n3};
    for (int y = 1; y <= 3; ++y) {
        Vec3 acc{};
        for (int x = 1; x <= 3; ++x) {
            const double sign = x == y ? -1.0 : 1.0;
            acc = acc + sign * (prep.bloch(x, 0) - prep.bloch(x, 1));
        }
        *n[y - 1] = acc;
    }
    return out;
}

inline std::array<EffectPair, 3> effects_along(const std::array<Vec3, 3>& axes, double eta) {
    return {make_effects(axes[0], eta), make_effects(axes[1], eta), make_effects(axes[2], eta)};
}

// First receiver: plain Born rule with unsharp effects.
inline double bob_success_numeric(const PreparationSet& prep, const SequentialConfig& cfg) {
    return success_probability(born_table(prep, effects_along(cfg.b_axes, cfg.eta_B)));
}

// Same quantity from the linear form 1/2 + (eta/36) sum_y n_y . b_y;
// the independent route for cross-checking the Born-rule table.
inline double bob_success_linear_form(const PreparationSet& prep, const SequentialConfig& cfg) {
    const NVectors n = n_vectors(prep);
    const double s = dot(n.n1, cfg.b_axes[0]) + dot(n.n2, cfg.b_axes[1]) + dot(n.n3, cfg.b_axes[2]);
    return 0.5 + cfg.eta_B / 36.0 * s;
}

// The carrier as the second receiver sees it: the first measurement is
// applied non-selectively with its setting chosen uniformly.
inline PreparationSet after_first_measurement(const PreparationSet& prep,
                                              const SequentialConfig& cfg) {
    const std::array<KrausPair, 3> kraus = make_kraus_triple(cfg.b_axes, cfg.eta_B);
    PreparationSet out;
    for (int i = 0; i < 6; ++i) out.states[i] = apply_kraus_average(prep.states[i], kraus);
    return out;
}

// Second receiver: full sequential simulation (average over the first
// receiver's non-selective measurement, then Born rule).
inline double charlie_success_numeric(const PreparationSet& prep, const SequentialConfig& cfg) {
    const PreparationSet degraded = after_first_measurement(prep, cfg);
    return success_probability(born_table(degraded, effects_along(cfg.c_axes, cfg.eta_C)));
}

// Third receiver: two non-selective layers, then Born rule.
inline double debbie_success_numeric(const PreparationSet& prep, const SequentialConfig& cfg) {
    PreparationSet degraded = after_first_measurement(prep, cfg);
    const std::array<KrausPair, 3> second = make_kraus_triple(cfg.c_axes, cfg.eta_C);
    for (int i = 0; i < 6; ++i) {
        degraded.states[i] = apply_kraus_average(degraded.states[i], second);
    }
    return success_probability(born_table(degraded, effects_along(cfg.d_axes, cfg.eta_D)));
}

// Isotropic in-plane shrink factor of the averaged non-selective update
// for three symmetric coplanar axes.
inline double gamma_of(double eta) {
    require_sharpness(eta);
    return 0.5 * (1.0 + std::sqrt(1.0 - eta * eta));
}

// Closed-form optimum for the first receiver.
inline double omega_b(double eta_B) {
    require_sharpness(eta_B);
    return 0.5 + eta_B / 3.0;
}

// Closed-form optimum for the second receiver.
inline double omega_c(double eta_B, double eta_C) {
    require_sharpness(eta_B);
    require_sharpness(eta_C);
    return 0.5 + eta_C * (1.0 + 2.0 * std::sqrt(1.0 - eta_B * eta_B)) / 9.0;
}

// Closed-form optimum for the third receiver.
inline double omega_d(double eta_B, double eta_C, double eta_D) {
    require_sharpness(eta_B);
    require_sharpness(eta_C);
    require_sharpness(eta_D);
    return 0.5 + eta_D / 27.0 * (1.0 + 2.0 * std::sqrt(1.0 - eta_B * eta_B)) *
                     (1.0 + 2.0 * std::sqrt(1.0 - eta_C * eta_C));
}

// --- random configurations for property checks ---------------------------

inline Vec3 random_unit_vector(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
    while (norm(v) < 1e-6) v = {gauss(rng), gauss(rng), gauss(rng)};
    return normalized(v);
}

inline std::array<Vec3, 3> random_directions(std::mt19937_64& rng) {
    return {random_unit_vector(rng), random_unit_vector(rng), random_unit_vector(rng)};
}

// A uniformly random plane and rotation give three coplanar unit vectors
// at mutual 120 degrees (they sum to zero); assembled into an antipodal
// preparation set that is balanced under the requested parity classing.
inline PreparationSet random_balanced_preparations(std::mt19937_64& rng,
                                                   ParityConvention conv) {
    const Vec3 e1 = random_unit_vector(rng);
    Vec3 raw = random_unit_vector(rng);
    while (std::abs(dot(raw, e1)) > 0.99) raw = random_unit_vector(rng);
    const Vec3 e2 = normalized(raw - dot(raw, e1) * e1);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    const double phi = angle(rng);
    std::array<Vec3, 3> u;
    for (int k = 0; k < 3; ++k) {
        const double t = phi + 2.0 * kPi * k / 3.0;
        u[k] = std::cos(t) * e1 + std::sin(t) * e2;
    }
    std::array<Vec3, 3> r0;
    if (conv == ParityConvention::output_bit) {
        // balanced when r10 + r20 + r30 = 0
        r0 = u;
    } else {
        // balanced when -r10 + r20 - r30 = 0; u0 and u1 are 120 degrees
        // apart so their sum is again a unit vector
        r0 = {u[0], u[0] + u[1], u[1]};
    }
    std::array<Vec3, 6> r;
    for (int x = 1; x <= 3; ++x) {
        r[2 * (x - 1) + 0] = r0[x - 1];
        r[2 * (x - 1) + 1] = -r0[x - 1];
    }
    return preparation_set_from_bloch(r);
}

}  // namespace pog
