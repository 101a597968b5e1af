// Acceptance gate: re-measures every agreed criterion and prints one
// PASS/FAIL line per clause with the measured numbers at the stated
// tolerances. Clauses that pin quoted values contradicted by the exact
// computation fail here by design; see README "Known divergences".

#include <pog/certification.hpp>
#include <pog/classical.hpp>
#include <pog/robustness.hpp>

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <random>

using namespace pog;

namespace {

int failures = 0;

void report(bool pass, const char* label, const char* fmt, ...) {
    if (!pass) ++failures;
    std::printf("%s %s: ", pass ? "PASS" : "FAIL", label);
    va_list args;
    va_start(args, fmt);
    std::vprintf(fmt, args);
    va_end(args);
    std::printf("\n");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    // 1. exact classical bound, exact rational equality, under a second
    {
        const auto t0 = std::chrono::steady_clock::now();
        const OracleResult r = enumerate_max(3);
        const double dt = seconds_since(t0);
        const bool exact = r.max_success == Rational::of(13, 18);
        report(exact && dt < 1.0, "criterion 1 (exact classical bound, runtime < 1 s)",
               "max = %lld/%lld over %lld encoders in %.3f s", r.max_success.num,
               r.max_success.den, r.strategies_searched, dt);
    }

    // 2. first receiver attains the closed-form optimum (11-point grid, 1e-12)
    {
        double worst = 0.0;
        for (int i = 0; i <= 10; ++i) {
            const double eta = i / 10.0;
            const double sim = bob_success_numeric(trine_preparations(kPi / 3.0),
                                                   ideal_sequential_config(kPi / 3.0, eta));
            worst = std::max(worst, std::abs(sim - omega_b(eta)));
        }
        report(worst <= 1e-12, "criterion 2 (first-receiver optimum, tol 1e-12)",
               "worst gap %.12g over 11 sharpness points", worst);
    }

    // 3a. second receiver's simulation vs closed form (same grid, 1e-10)
    {
        double worst = 0.0;
        for (int i = 0; i <= 10; ++i) {
            const double eta = i / 10.0;
            const double sim = charlie_success_numeric(
                trine_preparations(kPi / 3.0), ideal_sequential_config(kPi / 3.0, eta, 1.0));
            worst = std::max(worst, std::abs(sim - omega_c(eta, 1.0)));
        }
        report(worst <= 1e-10,
               "criterion 3a (second-receiver simulation vs closed form, tol 1e-10)",
               "worst gap %.12g (exact update exceeds the quoted closed form)", worst);
    }

    // 3b. symmetric point values and certified sharpness (5e-5)
    {
        const SymmetricPoint p = symmetric_point();
        const CertificationVerdict v = certify({p.omega, p.omega});
        const double certified = v.certified_eta_B.value_or(-1.0);
        const bool ok = std::abs(p.omega - 0.75457) <= 5e-5 && v.on_curve &&
                        std::abs(certified - 0.7637) <= 5e-5;
        report(ok, "criterion 3b (symmetric point, tol 5e-5)",
               "omega = %.12g (quote 0.75457), certified sharpness = %.12g (quote 0.7637)",
               p.omega, certified);
    }

    // 4. certification window endpoints (1e-12)
    {
        const double lo = eta_min_from_bob(13.0 / 18.0);
        const double hi = eta_max_from_charlie(13.0 / 18.0);
        const double gap = std::max(std::abs(lo - 2.0 / 3.0),
                                    std::abs(hi - std::sqrt(3.0) / 2.0));
        report(gap <= 1e-12, "criterion 4 (window endpoints, tol 1e-12)",
               "endpoints %.12g and %.12g, worst gap %.12g", lo, hi, gap);
    }

    // 5. third receiver needs an unattainable sharpness
    {
        const double at_edge = required_eta_d(2.0 / 3.0, eta_c_min(2.0 / 3.0));
        const auto [lo, hi] = sharpness_window();
        double min_required = at_edge;
        for (int i = 0; i <= 100; ++i) {
            const double eta_B = lo + (hi - lo) * i / 100.0;
            min_required = std::min(
                min_required, required_eta_d(eta_B, std::min(1.0, eta_c_min(eta_B))));
        }
        const bool ok = at_edge >= 1.08 && at_edge <= 1.11 && min_required > 1.0;
        report(ok, "criterion 5 (third receiver infeasible)",
               "edge requirement %.12g in [1.08, 1.11], window minimum %.12g > 1", at_edge,
               min_required);
    }

    // 6. robustness shift minima and operator inequalities (tol 1e-6 / 1e-9)
    {
        const auto t0 = std::chrono::steady_clock::now();
        const double etas[] = {2.0 / 3.0, 0.76, std::sqrt(3.0) / 2.0};
        for (double eta : etas) {
            const TMinimizationResult r =
                minimize_t(Scenario::prep, canonical_s(Scenario::prep, eta), eta);
            report(std::abs(r.t_value - 0.5) <= 1e-6, "criterion 6 (preparation shift, tol 1e-6)",
                   "sharpness %.6g: t = %.12g (expect 0.5)", eta, r.t_value);
        }
        for (double eta : etas) {
            const TMinimizationResult r = minimize_t(Scenario::meas_bob, 9.0, eta);
            const double expect = 0.25 - eta / 2.0;
            report(std::abs(r.t_value - expect) <= 1e-6,
                   "criterion 6 (first-receiver shift, tol 1e-6)",
                   "sharpness %.6g: t = %.12g at angle %.9g (expect %.12g)", eta, r.t_value,
                   r.theta_argmin, expect);
        }
        for (double eta : etas) {
            const TMinimizationResult r = minimize_t(
                Scenario::meas_charlie, canonical_s(Scenario::meas_charlie, eta), eta);
            const double g = gamma_of(eta);
            const double expect = (9.0 - 6.0 * g) / (2.0 - 14.0 * g);
            report(std::abs(r.t_value - expect) <= 1e-6,
                   "criterion 6 (second-receiver shift, tol 1e-6)",
                   "sharpness %.6g: t = %.12g at angle %.9g (expect %.12g)", eta, r.t_value,
                   r.theta_argmin, expect);
        }
        double worst_margin = 0.0;
        bool all_ok = true;
        for (Scenario scenario :
             {Scenario::prep, Scenario::meas_bob, Scenario::meas_charlie}) {
            for (double eta : etas) {
                const InequalityReport rep = verify_operator_inequalities(
                    scenario, canonical_s(scenario, eta), eta, std::nullopt, 1024, 1e-9);
                all_ok = all_ok && rep.all_satisfied;
                worst_margin = std::min(worst_margin, rep.worst_margin);
            }
        }
        const double dt = seconds_since(t0);
        report(all_ok && worst_margin >= -1e-9,
               "criterion 6 (operator inequalities, tol 1e-9)",
               "worst margin %.12g over nine 1024-point sweeps", worst_margin);
        report(dt < 30.0, "criterion 6 (runtime < 30 s)", "%.3f s", dt);
    }

    // 7. fidelity bounds equal 1 at the optima; quoted value at the ceiling
    {
        double worst = 0.0;
        const auto [lo, hi] = sharpness_window();
        for (int i = 0; i <= 20; ++i) {
            const double eta = lo + (hi - lo) * i / 20.0;
            worst = std::max(worst, std::abs(fidelity_bound_prep(omega_b(eta), eta) - 1.0));
            worst = std::max(worst,
                             std::abs(fidelity_bound_meas_bob(omega_b(eta), eta) - 1.0));
            worst = std::max(
                worst, std::abs(fidelity_bound_meas_charlie(omega_c(eta, 1.0), eta) - 1.0));
        }
        report(worst <= 1e-12, "criterion 7 (fidelity bounds tight at optima, tol 1e-12)",
               "worst deviation %.12g over the window", worst);
        const double at_ceiling = fidelity_bound_prep(13.0 / 18.0, 0.76);
        report(std::abs(at_ceiling - 0.93860) <= 1e-5,
               "criterion 7 (preparation bound at the ceiling, tol 1e-5)",
               "value %.12g (quote 0.93860)", at_ceiling);
    }

    // 8. closed forms vs the independent numerical routes
    {
        std::mt19937_64 rng(1234);
        std::uniform_real_distribution<double> theta_dist(0.0, kPi / 2.0);
        std::uniform_real_distribution<double> s_dist(0.5, 15.0);
        std::uniform_real_distribution<double> eta_dist(0.05, 1.0);
        std::uniform_real_distribution<double> c_dist(0.0, 1.0);
        std::uniform_int_distribution<int> scen_dist(0, 2);
        std::uniform_int_distribution<int> branch_dist(1, 3);
        double worst_t = 0.0;
        for (int i = 0; i < 256; ++i) {
            const Scenario scenario = static_cast<Scenario>(scen_dist(rng));
            const int branch = branch_dist(rng);
            const double theta = theta_dist(rng);
            const double s = s_dist(rng);
            const double eta = eta_dist(rng);
            const double c = c_dist(rng);
            const int interval = interval_of(theta);
            const double closed = closed_form_t(scenario, branch, theta, s, eta, c, interval);
            double eig = 1e300;
            for (int outcome = 0; outcome <= 1; ++outcome) {
                eig = std::min(eig, hermitian_eigenvalues(
                                        residual_operator(scenario, branch, outcome, theta,
                                                          s, eta, c, interval))
                                        .first);
            }
            worst_t = std::max(worst_t, std::abs(closed - eig));
        }
        report(worst_t <= 1e-9, "criterion 8 (closed-form spectra vs eigensolver, tol 1e-9)",
               "worst gap %.12g over 256 random draws", worst_t);

        std::uniform_real_distribution<double> ball(-1.0, 1.0);
        double worst_b = 0.0;
        for (int i = 0; i < 1000; ++i) {
            Vec3 r{ball(rng), ball(rng), ball(rng)};
            while (dot(r, r) > 1.0) r = {ball(rng), ball(rng), ball(rng)};
            const std::array<Vec3, 3> axes = random_directions(rng);
            const double eta = eta_dist(rng);
            const Vec3 via_kraus =
                state_to_bloch(apply_kraus_average(bloch_to_state(r), axes, eta));
            worst_b = std::max(worst_b, norm(via_kraus - bloch_update_average(r, axes, eta)));
        }
        report(worst_b <= 1e-12, "criterion 8 (matrix vs bloch update, tol 1e-12)",
               "worst gap %.12g over 1000 random states", worst_b);
    }

    // 9. sampled oblivious antipodal configurations vs the closed-form optima.
    //    The sampler seeds the analytic argmax configuration first, then
    //    draws the remaining configurations at random.
    {
        std::mt19937_64 rng(777);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        double worst_bob = -1.0;
        double worst_charlie = -1.0;
        for (int i = 0; i < 10000; ++i) {
            const double eta_B = 0.76;
            const double eta_C = 1.0;
            PreparationSet prep;
            SequentialConfig cfg;
            if (i == 0) {
                prep = trine_preparations(kPi / 3.0);
                cfg = ideal_sequential_config(kPi / 3.0, eta_B, eta_C);
            } else {
                prep = random_balanced_preparations(rng, ParityConvention::output_bit);
                cfg.b_axes = random_directions(rng);
                cfg.c_axes = random_directions(rng);
                cfg.eta_B = eta_B;
                cfg.eta_C = eta_C;
            }
            worst_bob =
                std::max(worst_bob, bob_success_numeric(prep, cfg) - omega_b(eta_B));
            worst_charlie = std::max(
                worst_charlie, charlie_success_numeric(prep, cfg) - omega_c(eta_B, eta_C));
        }
        report(worst_bob <= 1e-9, "criterion 9 (first-receiver optimum respected, tol 1e-9)",
               "worst excess %.12g over 10000 configurations", worst_bob);
        report(worst_charlie <= 1e-9,
               "criterion 9 (second-receiver closed form respected, tol 1e-9)",
               "worst excess %.12g (the argmax configuration beats the quoted form)",
               worst_charlie);
    }

    std::printf("%d clause(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
