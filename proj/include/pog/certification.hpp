#pragma once

// Inversion of the closed-form optima into certification statements: the
// feasible window for the first receiver's sharpness, the trade-off curve
// linking the two observed success probabilities, point/interval verdicts
// for an observed pair, and the infeasibility of a third receiver.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

#include "pog/quantum.hpp"

namespace pog {

// Ceiling for deterministic parity-oblivious classical strategies
// (established exactly by the classical oracle).
inline constexpr double kClassicalBound = 13.0 / 18.0;

struct ObservedPair {
    double a_b = 0.5;
    double a_c = 0.5;
};

struct CertificationVerdict {
    bool on_curve = false;
    std::optional<double> certified_eta_B;
    std::optional<std::pair<double, double>> eta_B_interval;
    bool both_quantum = false;
};

// The second receiver's optimum as a function of the first's, when both
// play optimally: 1/2 + (1 + sqrt(4 - 9(2w - 1)^2)) / 9.
inline double tradeoff_curve(double omega_B) {
    if (!(omega_B >= 0.5 - 1e-12 && omega_B <= 5.0 / 6.0 + 1e-12)) {
        throw std::domain_error("first receiver's optimum must lie in [1/2, 5/6]");
    }
    const double m = 2.0 * omega_B - 1.0;
    const double radicand = std::max(0.0, 4.0 - 9.0 * m * m);
    return 0.5 + (1.0 + std::sqrt(radicand)) / 9.0;
}

// Smallest sharpness consistent with an observed first-receiver success.
inline double eta_min_from_bob(double a_b) {
    if (!(a_b >= 0.5 - 1e-12 && a_b <= 5.0 / 6.0 + 1e-12)) {
        throw std::domain_error("first receiver's success must lie in [1/2, 5/6]");
    }
    return 3.0 * (a_b - 0.5);
}

// Largest sharpness consistent with an observed second-receiver success:
// sqrt(1 - u^2) with u = ((9/2)(2 a_c - 1) - 1) / 2.
inline double eta_max_from_charlie(double a_c) {
    const double u = 0.5 * (4.5 * (2.0 * a_c - 1.0) - 1.0);
    if (!(u >= -1.0 - 1e-12 && u <= 1.0 + 1e-12)) {
        throw std::domain_error("second receiver's success outside the invertible range");
    }
    return std::sqrt(std::max(0.0, 1.0 - u * u));
}

// Point verdict when the observed pair sits on the trade-off curve (the
// sharpness is then pinned uniquely); otherwise an interval verdict,
// reported only when both successes reach the classical ceiling.
inline CertificationVerdict certify(const ObservedPair& pair, double tol = 1e-6) {
    CertificationVerdict v;
    v.both_quantum = pair.a_b > kClassicalBound && pair.a_c > kClassicalBound;
    if (std::abs(pair.a_c - tradeoff_curve(pair.a_b)) <= tol) {
        v.on_curve = true;
        v.certified_eta_B = eta_min_from_bob(pair.a_b);
        return v;
    }
    if (pair.a_b >= kClassicalBound - 1e-12 && pair.a_c >= kClassicalBound - 1e-12) {
        const double lo = eta_min_from_bob(pair.a_b);
        const double hi = eta_max_from_charlie(pair.a_c);
        if (lo <= hi) v.eta_B_interval = {lo, hi};
    }
    return v;
}

// Sharpness the second receiver needs to reach the classical ceiling,
// given the disturbance left by the first.
inline double eta_c_min(double eta_B) {
    require_sharpness(eta_B);
    return 2.0 / (1.0 + 2.0 * std::sqrt(1.0 - eta_B * eta_B));
}

// Sharpness a third receiver would need to reach the classical ceiling
// after two rounds of disturbance; values above 1 are unattainable.
inline double required_eta_d(double eta_B, double eta_C) {
    require_sharpness(eta_B);
    require_sharpness(eta_C);
    return 6.0 / ((1.0 + 2.0 * std::sqrt(1.0 - eta_B * eta_B)) *
                  (1.0 + 2.0 * std::sqrt(1.0 - eta_C * eta_C)));
}

// Feasible window for the first receiver's sharpness when both receivers
// beat the classical ceiling.
inline std::pair<double, double> sharpness_window() {
    return {eta_min_from_bob(kClassicalBound), eta_max_from_charlie(kClassicalBound)};
}

// The balanced point where both receivers reach the same success: solving
// omega_b(eta) = omega_c(eta, 1) reduces to 13 eta^2 - 6 eta - 3 = 0,
// whose positive root is (3 + 4 sqrt(3)) / 13.
struct SymmetricPoint {
    double eta;
    double omega;
};

inline SymmetricPoint symmetric_point() {
    const double eta = (3.0 + 4.0 * std::sqrt(3.0)) / 13.0;
    return {eta, omega_b(eta)};
}

}  // namespace pog
