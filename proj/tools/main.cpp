#include <CLI11.hpp>

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    namespace cli = cyclab::cli;

    CLI::App app{"Numerical checks of cyclicity bounds for exponential polynomials"};
    app.set_version_flag("--version", "cyclab 0.1.0");

    std::string command;
    cli::RunManifest m;
    std::uint64_t seed = 0;
    std::size_t workers = 1, samples = 0;
    double epsilon = 0, delta = 0, H = 0, d = 0, R = 0, c_hat = 0;

    app.add_option("command", command, "coeffs | rolle | zeros | sweep | cartan | remez | frobenius")
        ->required()
        ->check(CLI::IsMember({"coeffs", "rolle", "zeros", "sweep", "cartan", "remez", "frobenius"}));
    app.add_option("-i,--input", m.input_path, "input JSON document")->required();
    app.add_option("-o,--output", m.output_path, "report path; .json or .csv")->required();
    auto* seed_opt = app.add_option("--seed", seed, "sweep seed");
    app.add_option("--truncation", m.truncation, "jet truncation order")->check(CLI::PositiveNumber);
    auto* workers_opt = app.add_option("--workers", workers, "sweep threads")->check(CLI::PositiveNumber);
    auto* eps_opt = app.add_option("--epsilon", epsilon, "parameter neighbourhood radius");
    auto* delta_opt = app.add_option("--delta", delta, "zero-count disk radius");
    auto* samples_opt = app.add_option("--samples", samples, "sweep sample count")->check(CLI::PositiveNumber);
    auto* h_opt = app.add_option("--H", H, "Cartan H in (0, 1]");
    auto* d_opt = app.add_option("--d", d, "Cartan exponent d");
    auto* r_opt = app.add_option("--R", R, "Cartan disk radius");
    auto* chat_opt = app.add_option("--c-hat", c_hat, "Remez constant");
    app.add_option("--max-n", m.max_n, "coeffs: largest index");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cyclab::cli::exit_usage;
    }

    m.command = cli::command_from_string(command);
    if (*seed_opt) m.seed = seed;
    if (*workers_opt) m.workers = workers;
    if (*samples_opt) m.samples = samples;
    if (*eps_opt) m.epsilon = epsilon;
    if (*delta_opt) m.delta = delta;
    if (*h_opt) m.H = H;
    if (*d_opt) m.d = d;
    if (*r_opt) m.R = R;
    if (*chat_opt) m.c_hat = c_hat;

    return cli::run(m, std::cerr);
}
