// lpsem: compute, compare and check semantics of normal logic programs.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "lpsem/cli.hpp"

namespace {

using lpsem::cli::RunConfig;

void add_output_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_program_input(CLI::App* cmd, RunConfig& cfg, bool required) {
    auto* opt = cmd->add_option("input", cfg.input, "Program file ('-' for stdin)");
    if (required) opt->required();
}

void add_cap(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--cap", cfg.cap, "Atom bound for model enumeration")->check(CLI::PositiveNumber);
}

void add_generator_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--seed", cfg.seed, "Random seed");
    cmd->add_option("--atoms", cfg.gen.atoms, "Atoms per generated program")->check(CLI::PositiveNumber);
    cmd->add_option("--clauses", cfg.gen.clauses, "Clauses per generated program");
    cmd->add_option("--max-body", cfg.gen.max_body, "Longest generated clause body");
    cmd->add_option("--neg-prob", cfg.gen.neg_prob, "Probability a body literal is negated")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_flag("--stratified", cfg.gen.stratified, "Generate locally stratified programs");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semantics of normal logic programs"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* compute = app.add_subcommand("compute", "Compute one semantics of a program");
    add_program_input(compute, cfg, true);
    compute->add_option("--semantics", cfg.semantics,
                        "least|greatest|fitting|wf|wf-alt|maxwf|maxwf-alt|stable|maxstable|supported");
    add_output_flags(compute, cfg);
    add_cap(compute, cfg);
    compute->add_flag("--trace", cfg.trace, "Print every iteration stage");

    auto* compare = app.add_subcommand("compare", "Compute every semantics and compare them");
    add_program_input(compare, cfg, true);
    add_output_flags(compare, cfg);
    add_cap(compare, cfg);

    auto* check = app.add_subcommand("check", "Run the characterization checks on a program or on random programs");
    add_program_input(check, cfg, false);
    add_output_flags(check, cfg);
    add_cap(check, cfg);
    add_generator_flags(check, cfg);
    check->add_option("--programs", cfg.programs, "Number of generated programs")->check(CLI::PositiveNumber);
    check->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* gen = app.add_subcommand("gen", "Print a random program");
    add_output_flags(gen, cfg);
    add_generator_flags(gen, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : lpsem::cli::kExitUsage;
    }

    if (compute->parsed()) return lpsem::cli::cmd_compute(cfg, std::cout, std::cerr);
    if (compare->parsed()) return lpsem::cli::cmd_compare(cfg, std::cout, std::cerr);
    if (check->parsed()) return lpsem::cli::cmd_check(cfg, std::cout, std::cerr);
    return lpsem::cli::cmd_gen(cfg, std::cout, std::cerr);
}
