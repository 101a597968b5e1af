#pragma once

// Robustness analysis: how far the preparations or measurements can be
// deformed by a dephasing channel while an affine lower bound on average
// fidelity in terms of observed success probability stays valid. Provides
// the channel, the K/W/Z operator constructions, minimum-eigenvalue
// checks of the operator inequalities K - s W (or Z) >= t I, closed-form
// per-branch eigenvalue expressions, the theta-minimization of the bound
// intercept t, and the resulting fidelity lower bounds.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "pog/game.hpp"
#include "pog/matrix2.hpp"
#include "pog/quantum.hpp"

namespace pog {

enum class Scenario { prep, meas_bob, meas_charlie };

// theta ranges: interval 1 is [0, pi/3], interval 2 is (pi/3, pi/2].
inline int interval_of(double theta) {
    require_trine_angle(theta);
    return theta <= kPi / 3.0 + 1e-14 ? 1 : 2;
}

// Dephasing strength: c = min{1, (s/6) sin theta} on interval 1 and
// c = min{1, (s/6) cos theta} on interval 2.
inline double c_rule(double theta, double s) {
    const double raw = interval_of(theta) == 1 ? (s / 6.0) * std::sin(theta)
                                               : (s / 6.0) * std::cos(theta);
    return std::min(1.0, raw);
}

// Reflection axis of the channel, per interval: the ideal second (resp.
// third) preparation direction.
inline Vec3 dephasing_axis(int interval) {
    if (interval == 1) return {-0.5, 0.0, std::sqrt(3.0) / 2.0};
    if (interval == 2) return {-0.5, 0.0, -std::sqrt(3.0) / 2.0};
    throw std::invalid_argument("interval must be 1 or 2");
}

// rho -> ((1+c)/2) rho + ((1-c)/2) G rho G with G the Hermitian unitary
// reflecting about the interval's axis. Unital and self-dual, so it can
// be applied to states and effects alike.
struct DephasingChannel {
    double theta = 0.0;
    double c = 1.0;
    Mat2 gamma_op = identity2();
};

inline DephasingChannel make_dephasing_channel(double theta, double c, int interval) {
    require_trine_angle(theta);
    if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("dephasing weight outside [0, 1]");
    return {theta, c, pauli_dot(dephasing_axis(interval))};
}

inline DephasingChannel make_dephasing_channel(double theta, double s) {
    return make_dephasing_channel(theta, c_rule(theta, s), interval_of(theta));
}

inline Mat2 dephase(const DephasingChannel& ch, const Mat2& rho) {
    return 0.5 * (1.0 + ch.c) * rho + 0.5 * (1.0 - ch.c) * (ch.gamma_op * rho * ch.gamma_op);
}

// The same channel acting on Bloch vectors (independent route):
// r -> ((1+c)/2) r + ((1-c)/2) (2 (g.r) g - r).
inline Vec3 dephase_bloch(const Vec3& r, double c, int interval) {
    const Vec3 g = dephasing_axis(interval);
    return 0.5 * (1.0 + c) * r + 0.5 * (1.0 - c) * (2.0 * dot(g, r) * g - r);
}

// Success-functional weight of preparation (x, a):
// W_xa = (1/36) sum_y (-1)^{[x==y] xor a} eta (b_y . sigma). Satisfies
// sum_xa Tr[rho_xa W_xa] + 1/2 = success probability.
inline Mat2 w_operator(int x, int a, const std::array<Vec3, 3>& directions, double eta_B) {
    require_game_range(x, a, 1);
    require_sharpness(eta_B);
    Vec3 acc{};
    for (int y = 1; y <= 3; ++y) {
        const double sign = (((x == y ? 1 : 0) ^ a) != 0) ? -1.0 : 1.0;
        acc = acc + sign * directions[y - 1];
    }
    return (eta_B / 36.0) * pauli_dot(acc);
}

// Success-functional weight of outcome b at setting y:
// Z_yb = (1/18) sum over the (x, a) whose winning output at y is b of
// rho_xa. Satisfies sum_yb Tr[E_{b|y} Z_yb] = success probability.
inline Mat2 z_operator(int y, int b, const PreparationSet& prep) {
    require_game_range(1, b, y);
    Mat2 acc{};
    for (int x = 1; x <= 3; ++x) {
        for (int a = 0; a <= 1; ++a) {
            if (winning_output(x, a, y) == b) acc = acc + prep.state(x, a);
        }
    }
    return (1.0 / 18.0) * acc;
}

// Largest uniform shift t such that K - s*target - t I stays PSD, i.e.
// the smallest eigenvalue of K - s*target.
inline double min_eigen_t(const Mat2& K, const Mat2& target, double s) {
    return hermitian_eigenvalues(K - s * target).first;
}

// The slope parameter at which each scenario's fidelity bound is tight at
// the optimum.
inline double canonical_s(Scenario scenario, double eta_B) {
    switch (scenario) {
        case Scenario::prep:
            if (eta_B <= 0.0) throw std::invalid_argument("sharpness must be positive");
            return 9.0 / eta_B;
        case Scenario::meas_bob:
            return 9.0;
        case Scenario::meas_charlie:
            return 54.0 / (7.0 * gamma_of(eta_B) - 1.0);
    }
    throw std::invalid_argument("unknown scenario");
}

// Residual operator K - s * (W or Z) for one branch/outcome of a
// scenario at a given channel configuration:
//  - prep: K = channel(ideal preparation (x=branch, a=outcome)),
//    target = W_xa built from the rotated measurement directions;
//  - meas_bob: K = channel(ideal unsharp effect at setting y=branch,
//    outcome b), target = Z_yb over the rotated preparations;
//  - meas_charlie: K = channel(ideal sharp effect), target = Z_yb over
//    the rotated preparations shrunk by the first receiver's disturbance.
inline Mat2 residual_operator(Scenario scenario, int branch, int outcome, double theta,
                              double s, double eta_B, double c, int interval) {
    const DephasingChannel ch = make_dephasing_channel(theta, c, interval);
    if (scenario == Scenario::prep) {
        const Mat2 K = dephase(ch, trine_preparations(kPi / 3.0).state(branch, outcome));
        return K - s * w_operator(branch, outcome, ideal_directions(theta), eta_B);
    }
    const double sign = outcome == 0 ? 1.0 : -1.0;
    const Vec3 ideal_dir = ideal_directions(kPi / 3.0)[branch - 1];
    if (scenario == Scenario::meas_bob) {
        const Mat2 K = 0.5 * (identity2() + (sign * eta_B) * pauli_dot(dephase_bloch(ideal_dir, c, interval)));
        return K - s * z_operator(branch, outcome, trine_preparations(theta));
    }
    // meas_charlie: sharp effect against shrunk preparations
    const double g = gamma_of(eta_B);
    PreparationSet shrunk = trine_preparations(theta);
    for (Mat2& st : shrunk.states) st = bloch_to_state(g * state_to_bloch(st));
    const Mat2 K = 0.5 * (identity2() + sign * pauli_dot(dephase_bloch(ideal_dir, c, interval)));
    return K - s * z_operator(branch, outcome, shrunk);
}

namespace detail {

// Shared radicand family for the prep scenario (u = s*eta) and the
// meas_charlie scenario (u = s*gamma).
inline std::array<double, 3> prep_style_radicands(double u, double c, double theta, int interval) {
    const double ct = std::cos(theta);
    const double c2t = std::cos(2.0 * theta);
    const double st = std::sin(theta);
    const double rt3 = std::sqrt(3.0);
    const double u2 = u * u;
    const double r1 = 81.0 + 243.0 * c * c - 9.0 * u - 27.0 * c * u + 3.0 * u2 - 18.0 * u * ct -
                      54.0 * c * u * ct + 4.0 * u2 * ct + 2.0 * u2 * c2t;
    const double ra = 324.0 - 18.0 * u + 3.0 * u2 - 2.0 * u2 * c2t - 36.0 * rt3 * u * st;
    const double rb = 81.0 + 243.0 * c * c + 9.0 * u - 27.0 * c * u + u2 - 18.0 * rt3 * u * st -
                      18.0 * rt3 * c * u * st + 4.0 * u2 * st * st;
    return interval == 1 ? std::array<double, 3>{r1, ra, rb} : std::array<double, 3>{r1, rb, ra};
}

inline std::array<double, 3> meas_bob_radicands(double s, double eta, double c, double theta,
                                                int interval) {
    const double ct = std::cos(theta);
    const double c2t = std::cos(2.0 * theta);
    const double st = std::sin(theta);
    const double rt3 = std::sqrt(3.0);
    const double u = s * eta;
    const double s2 = s * s;
    const double e2 = eta * eta;
    const double q1 = 3.0 * s2 - 9.0 * u - 27.0 * c * u + 81.0 * e2 + 243.0 * c * c * e2 +
                      4.0 * s2 * ct - 18.0 * u * ct - 54.0 * c * u * ct + 2.0 * s2 * c2t;
    const double qa = s2 - 18.0 * u + 324.0 * e2 - 36.0 * rt3 * u * st + 4.0 * s2 * st * st;
    const double qb = s2 + 9.0 * u - 27.0 * c * u + 81.0 * e2 + 243.0 * c * c * e2 -
                      18.0 * rt3 * u * st - 18.0 * rt3 * c * u * st + 4.0 * s2 * st * st;
    return interval == 1 ? std::array<double, 3>{q1, qa, qb} : std::array<double, 3>{q1, qb, qa};
}

}  // namespace detail

// Both closed-form eigenvalue branches (lower, upper) of the residual
// operators for one branch index: the two outcome residuals share their
// trace, so across them the extreme eigenvalues are the two roots of a
// single quadratic. The lower root is the smallest eigenvalue over both
// outcomes (the PSD threshold); the upper root is the largest, and its
// branch average at the ideal angle is the intercept at which the affine
// fidelity bound becomes tight at the optimum.
inline std::pair<double, double> closed_form_t_branches(Scenario scenario, int branch,
                                                        double theta, double s, double eta_B,
                                                        double c, int interval) {
    require_trine_angle(theta);
    if (branch < 1 || branch > 3) throw std::invalid_argument("branch must be 1, 2 or 3");
    if (interval != 1 && interval != 2) throw std::invalid_argument("interval must be 1 or 2");
    double center = 0.0;
    double radicand = 0.0;
    switch (scenario) {
        case Scenario::prep: {
            center = 18.0;
            radicand = detail::prep_style_radicands(s * eta_B, c, theta, interval)[branch - 1];
            break;
        }
        case Scenario::meas_bob: {
            center = 18.0 - 3.0 * s;
            radicand = detail::meas_bob_radicands(s, eta_B, c, theta, interval)[branch - 1];
            break;
        }
        case Scenario::meas_charlie: {
            center = 18.0 - 3.0 * s;
            radicand =
                detail::prep_style_radicands(s * gamma_of(eta_B), c, theta, interval)[branch - 1];
            break;
        }
    }
    const double root = std::sqrt(std::max(0.0, radicand));
    return {(center - root) / 36.0, (center + root) / 36.0};
}

// min of the two branches = the smallest eigenvalue of the residual
// operator; agrees with min_eigen_t on the matching operators.
inline double closed_form_t(Scenario scenario, int branch, double theta, double s, double eta_B,
                            double c, int interval) {
    const auto [lo, hi] = closed_form_t_branches(scenario, branch, theta, s, eta_B, c, interval);
    return std::min(lo, hi);
}

struct TMinimizationResult {
    double t_value = 0.0;
    double theta_argmin = 0.0;
    double t1 = 0.0;
    double t2 = 0.0;
    double t3 = 0.0;
    int grid_resolution = 0;
};

// Which eigenvalue branch the theta scan averages: the upper branch is
// the tight-intercept reading (its minimum is the published intercept at
// the canonical slope); the lower branch is the smallest-eigenvalue
// reading (closed_form_t).
enum class RootBranch { lower, upper };

namespace detail {

// Mean over the three branches of the chosen eigenvalue root, with the
// channel's own c(theta) rule; the quantity minimized over theta.
inline double intercept_objective(Scenario scenario, double theta, double s, double eta_B,
                                  RootBranch root) {
    const int interval = interval_of(theta);
    const double c = c_rule(theta, s);
    double sum = 0.0;
    for (int branch = 1; branch <= 3; ++branch) {
        const auto [lo, hi] =
            closed_form_t_branches(scenario, branch, theta, s, eta_B, c, interval);
        sum += root == RootBranch::upper ? hi : lo;
    }
    return sum / 3.0;
}

}  // namespace detail

// Grid scan of the branch-average objective over both theta intervals
// with golden-section refinement around the best grid point.
inline TMinimizationResult minimize_t(Scenario scenario, double s, double eta_B,
                                      int grid_n = 1024, RootBranch root = RootBranch::upper) {
    if (grid_n < 64) throw std::invalid_argument("grid must have at least 64 points");
    const auto objective = [&](double theta) {
        return detail::intercept_objective(scenario, theta, s, eta_B, root);
    };

    double best_theta = 0.0;
    double best_value = objective(0.0);
    const auto consider = [&](double theta) {
        const double v = objective(theta);
        if (v < best_value) {
            best_value = v;
            best_theta = theta;
        }
    };

    const double pi3 = kPi / 3.0;
    const double pi2 = kPi / 2.0;
    const double step1 = pi3 / (grid_n - 1);
    for (int i = 0; i < grid_n; ++i) consider(i * step1);
    const double step2 = (pi2 - pi3) / grid_n;
    for (int i = 1; i <= grid_n; ++i) consider(pi3 + i * step2);

    // Refine inside the interval containing the best grid point; the
    // objective can jump at pi/3 (both the axis and the c rule switch),
    // so the bracket never straddles the boundary.
    const bool first = best_theta <= pi3 + 1e-14;
    const double step = first ? step1 : step2;
    double lo = std::max(first ? 0.0 : pi3 + 1e-13, best_theta - step);
    double hi = std::min(first ? pi3 : pi2, best_theta + step);
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - ratio * (hi - lo);
    double x2 = lo + ratio * (hi - lo);
    double f1 = objective(x1);
    double f2 = objective(x2);
    while (hi - lo > 1e-10) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = objective(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = objective(x2);
        }
    }
    consider(0.5 * (lo + hi));

    TMinimizationResult out;
    out.t_value = best_value;
    out.theta_argmin = best_theta;
    const int interval = interval_of(best_theta);
    const double c = c_rule(best_theta, s);
    const auto branch_value = [&](int branch) {
        const auto [lo, hi] = closed_form_t_branches(scenario, branch, best_theta, s, eta_B, c, interval);
        return root == RootBranch::upper ? hi : lo;
    };
    out.t1 = branch_value(1);
    out.t2 = branch_value(2);
    out.t3 = branch_value(3);
    out.grid_resolution = grid_n;
    return out;
}

struct InequalityReport {
    bool all_satisfied = false;
    double worst_margin = 0.0;  // min over the grid of lambda_min - threshold
    double worst_theta = 0.0;
    int worst_branch = 0;   // x (prep) or y (measurement scenarios)
    int worst_outcome = 0;  // a (prep) or b (measurement scenarios)
    int grid_points = 0;
};

// Sweep theta over [0, pi/2] and check every branch/outcome operator
// against its threshold: the scenario's closed-form smallest eigenvalue
// by default, or the fixed value t_fixed when given (for probing
// off-design parameters). Violations are reported, not thrown.
inline InequalityReport verify_operator_inequalities(Scenario scenario, double s, double eta_B,
                                                     std::optional<double> t_fixed = std::nullopt,
                                                     int grid_n = 1024, double tol = 1e-9) {
    if (grid_n < 2) throw std::invalid_argument("grid must have at least 2 points");
    InequalityReport report;
    report.grid_points = grid_n;
    report.worst_margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_n; ++i) {
        const double theta = (kPi / 2.0) * i / (grid_n - 1);
        const int interval = interval_of(theta);
        const double c = c_rule(theta, s);
        for (int branch = 1; branch <= 3; ++branch) {
            const double threshold =
                t_fixed ? *t_fixed
                        : closed_form_t(scenario, branch, theta, s, eta_B, c, interval);
            for (int outcome = 0; outcome <= 1; ++outcome) {
                const Mat2 M =
                    residual_operator(scenario, branch, outcome, theta, s, eta_B, c, interval);
                const double margin = hermitian_eigenvalues(M).first - threshold;
                if (margin < report.worst_margin) {
                    report.worst_margin = margin;
                    report.worst_theta = theta;
                    report.worst_branch = branch;
                    report.worst_outcome = outcome;
                }
            }
        }
    }
    report.all_satisfied = report.worst_margin >= -tol;
    return report;
}

// Affine fidelity lower bound: value = (s/6) * (A - offset) + t, with the
// offset convention recorded explicitly.
struct FidelityBound {
    double s = 0.0;
    double t = 0.0;
    bool offset_from_half = false;

    double eval(double A) const { return (s / 6.0) * (offset_from_half ? A - 0.5 : A) + t; }
};

inline FidelityBound make_fidelity_bound(Scenario scenario, double eta_B) {
    const double s = canonical_s(scenario, eta_B);
    switch (scenario) {
        case Scenario::prep:
            return {s, 0.5, true};
        case Scenario::meas_bob:
            return {s, 0.25 - eta_B / 2.0, false};
        case Scenario::meas_charlie: {
            const double g = gamma_of(eta_B);
            return {s, (9.0 - 6.0 * g) / (2.0 - 14.0 * g), false};
        }
    }
    throw std::invalid_argument("unknown scenario");
}

namespace detail {
inline void require_success_range(double A, double optimum) {
    if (!(A >= 0.5 - 1e-12 && A <= optimum + 1e-12)) {
        throw std::domain_error("success probability outside [1/2, optimum]");
    }
}
}  // namespace detail

// Lower bound on the average fidelity of the six preparations:
// (3 / (2 eta)) (A - 1/2) + 1/2; equals 1 at A = omega_b(eta).
inline double fidelity_bound_prep(double a_b, double eta_B) {
    if (eta_B <= 0.0) throw std::invalid_argument("sharpness must be positive");
    require_sharpness(eta_B);
    detail::require_success_range(a_b, omega_b(eta_B));
    return make_fidelity_bound(Scenario::prep, eta_B).eval(a_b);
}

// Lower bound on the average fidelity of the first receiver's effects:
// (3/2) A + 1/4 - eta/2; equals 1 at A = omega_b(eta).
inline double fidelity_bound_meas_bob(double a_b, double eta_B) {
    require_sharpness(eta_B);
    detail::require_success_range(a_b, omega_b(eta_B));
    return make_fidelity_bound(Scenario::meas_bob, eta_B).eval(a_b);
}

// Lower bound on the average fidelity of the second receiver's effects:
// (9 / (7g - 1)) A + (9 - 6g) / (2 - 14g) with g the in-plane shrink of
// the first measurement; equals 1 at A = omega_c(eta, 1).
inline double fidelity_bound_meas_charlie(double a_c, double eta_B) {
    require_sharpness(eta_B);
    detail::require_success_range(a_c, omega_c(eta_B, 1.0));
    return make_fidelity_bound(Scenario::meas_charlie, eta_B).eval(a_c);
}

}  // namespace pog
