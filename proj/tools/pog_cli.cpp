// Command-line front end: parameter sweeps, certification verdicts, and
// figure-data emission in CSV/JSON.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict or failed
// property suite, 2 usage error, 3 I/O error. Output is plain text with
// no escape sequences, so NO_COLOR is honored trivially.

#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "pog/cli_commands.hpp"

namespace {

pog::cli::Format parse_format(const std::string& name) {
    if (name == "json") return pog::cli::Format::json;
    return pog::cli::Format::csv;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parity-oblivious prepare-measure game: bounds, certification, robustness"};
    app.require_subcommand(1);

    // classical-bound
    int d = 3;
    std::string cb_format = "text";
    std::string cb_out;
    CLI::App* cb = app.add_subcommand(
        "classical-bound", "Exact maximum of parity-respecting classical strategies");
    cb->add_option("-d,--alphabet-size", d, "message alphabet size (1..6)")
        ->default_val(3);
    cb->add_option("--format", cb_format, "output format: text or json")->default_val("text");
    cb->add_option("--out", cb_out, "write the report to this file");

    // tradeoff
    int tr_steps = 201;
    double tr_eta_c = 1.0;
    std::string tr_format = "csv";
    std::string tr_out;
    CLI::App* tr = app.add_subcommand(
        "tradeoff", "Sweep the first receiver's sharpness; emit both receivers' optima");
    tr->add_option("--steps", tr_steps, "number of sweep rows")->default_val(201);
    tr->add_option("--eta-c", tr_eta_c, "second receiver's sharpness")->default_val(1.0);
    tr->add_option("--format", tr_format, "output format: csv or json")->default_val("csv");
    tr->add_option("--out", tr_out, "write the table to this file");

    // certify
    double a_b = 0.0;
    double a_c = 0.0;
    double cert_tol = 1e-6;
    std::string cert_out;
    CLI::App* cert = app.add_subcommand(
        "certify", "Certify the first receiver's sharpness from an observed success pair");
    cert->add_option("A_B", a_b, "first receiver's observed success probability")->required();
    cert->add_option("A_C", a_c, "second receiver's observed success probability")->required();
    cert->add_option("--tol", cert_tol, "on-curve tolerance")->default_val(1e-6);
    cert->add_option("--out", cert_out, "write the JSON verdict to this file");

    // debbie
    int deb_steps = 201;
    std::string deb_format = "csv";
    std::string deb_out;
    CLI::App* deb = app.add_subcommand(
        "debbie", "Sharpness a third receiver would need across the feasible window");
    deb->add_option("--steps", deb_steps, "number of sweep rows")->default_val(201);
    deb->add_option("--format", deb_format, "output format: csv or json")->default_val("csv");
    deb->add_option("--out", deb_out, "write the table to this file");

    // robustness
    std::string scenario;
    double rob_eta_b = 0.0;
    int rob_steps = 201;
    int rob_grid_n = 1024;
    double rob_tol = 1e-9;
    std::string rob_format = "csv";
    std::string rob_out;
    CLI::App* rob = app.add_subcommand(
        "robustness", "Fidelity lower bound versus observed success, with operator checks");
    rob->add_option("scenario", scenario, "prep, meas_bob, or meas_charlie")->required();
    rob->add_option("--eta-b", rob_eta_b, "first receiver's sharpness")->required();
    rob->add_option("--steps", rob_steps, "number of sweep rows")->default_val(201);
    rob->add_option("--grid-n", rob_grid_n, "theta grid points for the operator check")
        ->default_val(1024);
    rob->add_option("--tol", rob_tol, "operator-inequality tolerance")->default_val(1e-9);
    rob->add_option("--format", rob_format, "output format: csv or json")->default_val("csv");
    rob->add_option("--out", rob_out, "write the table to this file");

    // verify-all
    std::uint64_t seed = 12345;
    bool inject_fault = false;
    CLI::App* ver = app.add_subcommand(
        "verify-all", "Run the cross-module invariant suite; exit 0 iff every property holds");
    ver->add_option("--seed", seed, "seed for the sampled checks (verdicts are seed-stable)")
        ->default_val(12345);
    ver->add_flag("--self-test-fault", inject_fault,
                  "perturb the trine angle to prove the optimality check has teeth");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exits 0
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (cb->parsed()) {
            return pog::cli::cmd_classical_bound(d, parse_format(cb_format), cb_out, std::cout,
                                                 std::cerr);
        }
        if (tr->parsed()) {
            return pog::cli::cmd_tradeoff(tr_steps, tr_eta_c, parse_format(tr_format), tr_out,
                                          std::cout, std::cerr);
        }
        if (cert->parsed()) {
            return pog::cli::cmd_certify(a_b, a_c, cert_tol, cert_out, std::cout, std::cerr);
        }
        if (deb->parsed()) {
            return pog::cli::cmd_debbie(deb_steps, parse_format(deb_format), deb_out, std::cout,
                                        std::cerr);
        }
        if (rob->parsed()) {
            return pog::cli::cmd_robustness(scenario, rob_eta_b, rob_steps, rob_grid_n, rob_tol,
                                            parse_format(rob_format), rob_out, std::cout,
                                            std::cerr);
        }
        if (ver->parsed()) {
            return pog::cli::cmd_verify_all(seed, inject_fault, std::cout);
        }
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
