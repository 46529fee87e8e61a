#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "radix/cli.hpp"

namespace {

void add_common(CLI::App* cmd, radix::cli::CommandOptions& opt) {
    cmd->add_option("equation", opt.input, "polynomial equation, e.g. \"x^3 + 6x = 20\"")->required();
    cmd->add_option("--format", opt.format, "output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, radix::cli::OutputFormat>{{"text", radix::cli::OutputFormat::Text},
                                                            {"json", radix::cli::OutputFormat::Json},
                                                            {"latex", radix::cli::OutputFormat::Latex}},
            CLI::ignore_case));
    cmd->add_flag("--verbose,-v", opt.verbose, "print intermediate steps");
    cmd->add_flag("--decimal-as-ratio", opt.decimal_as_ratio, "accept decimal literals as exact fractions");
}

void add_numeric(CLI::App* cmd, radix::cli::CommandOptions& opt) {
    cmd->add_option("--method", opt.method, "quartic method")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, radix::MethodPreference>{{"auto", radix::MethodPreference::Auto},
                                                           {"ferrari", radix::MethodPreference::Ferrari},
                                                           {"euler", radix::MethodPreference::Euler}},
            CLI::ignore_case));
    cmd->add_option("--precision", opt.precision, "working precision in bits")->check(CLI::Range(32u, 65536u));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"radix: exact radical solutions of polynomial equations up to degree 4, solvability of quintics"};
    app.require_subcommand(1);

    radix::cli::CommandOptions opt;
    opt.precision = radix::cli::default_precision();

    auto* solve = app.add_subcommand("solve", "solve by radicals (degree 1 to 4)");
    add_common(solve, opt);
    add_numeric(solve, opt);

    auto* verify = app.add_subcommand("verify", "check radical roots against a numeric oracle");
    add_common(verify, opt);
    add_numeric(verify, opt);

    auto* galois = app.add_subcommand("galois", "decide solvability by radicals of a quintic");
    add_common(galois, opt);
    galois->add_option("--max-primes", opt.max_primes, "number of primes to sample")->check(CLI::Range(1, 200));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : radix::cli::kUsageError;
    }

    try {
        if (solve->parsed()) return radix::cli::cmd_solve(opt, std::cout, std::cerr);
        if (verify->parsed()) return radix::cli::cmd_verify(opt, std::cout, std::cerr);
        return radix::cli::cmd_galois(opt, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return radix::cli::kInternalError;
    }
}
