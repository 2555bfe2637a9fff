#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "bient_cli/commands.hpp"

int main(int argc, char** argv) {
    using namespace bient::cli;

    CLI::App app{"Entanglement measures for qubit-qubit and qubit-qutrit pure states"};
    app.require_subcommand(1);

    std::string state_path;
    ReportFormat format = ReportFormat::text;
    bool renormalize = false;
    const std::map<std::string, ReportFormat> formats{{"text", ReportFormat::text}, {"json", ReportFormat::json}};
    auto* compute = app.add_subcommand("compute", "Print the entanglement report of a state file");
    compute->add_option("path", state_path, "State file")->required();
    compute->add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    compute->add_flag("--renormalize", renormalize, "Scale amplitudes to unit norm before validation");

    std::size_t n = 1000;
    std::uint64_t seed = 42;
    double tol = 1e-10;
    auto* verify = app.add_subcommand("verify", "Cross-check every formula route over a Haar ensemble");
    verify->add_option("--n", n, "Number of Haar-random states")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--tol", tol, "Per-check tolerance")->check(CLI::NonNegativeNumber);

    std::size_t sample_n = 1000;
    std::uint64_t sample_seed = 42;
    std::string out_path = "-";
    auto* sample = app.add_subcommand("sample", "Write a CSV of measures for Haar-random 2x3 states");
    sample->add_option("--n", sample_n, "Number of states")->check(CLI::PositiveNumber);
    sample->add_option("--seed", sample_seed, "Random seed");
    sample->add_option("--out", out_path, "Output CSV path ('-' for standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*compute) return cmd_compute(state_path, format, renormalize, std::cout, std::cerr);
    if (*verify) return cmd_verify(n, seed, tol, std::cout, std::cerr);
    return cmd_sample(sample_n, sample_seed, out_path, std::cout, std::cerr);
}
