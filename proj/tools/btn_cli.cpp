// btn: construct and verify Boolean threshold networks that losslessly
// compress a given set of distinct bit vectors. See README.md for the
// command reference.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "btn/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Boolean threshold network encoder/autoencoder toolkit"};
    app.require_subcommand(1);

    btn::cli::gen_options gen;
    auto* cmd_gen = app.add_subcommand("gen", "generate a random dataset file");
    cmd_gen->add_option("--n", gen.n, "number of vectors")->required();
    cmd_gen->add_option("--D", gen.dim, "vector dimension")->required();
    cmd_gen->add_option("--density", gen.density,
                        "\"dense\" (fair bits) or an exact ones count per vector");
    cmd_gen->add_option("--seed", gen.seed, "random seed")->required();
    cmd_gen->add_option("--out", gen.out, "output dataset path")->required();

    btn::cli::build_options build;
    auto* cmd_build = app.add_subcommand("build", "construct a network");
    cmd_build
        ->add_option("--construction", build.construction,
                     "step-enc | sqrt-enc | log-enc3 | log-enc4 | auto3 | "
                     "auto5-sqrt | auto5-log | auto7 | rand-sign | parity | hard-enc")
        ->required();
    cmd_build->add_option("--dataset", build.dataset_path, "dataset file");
    std::size_t build_d = 0;
    auto* build_d_opt =
        cmd_build->add_option("--d", build_d, "instance parameter for hard-enc");
    std::uint64_t build_seed = 0;
    auto* build_seed_opt = cmd_build->add_option(
        "--seed", build_seed, "random seed (required for rand-sign / parity)");
    cmd_build->add_option("--max-attempts", build.max_attempts,
                          "resampling budget for randomized constructions");
    cmd_build->add_option("--out", build.out, "output network path")->required();

    btn::cli::verify_options verify;
    auto* cmd_verify =
        app.add_subcommand("verify", "check a network against a dataset");
    cmd_verify->add_option("--network", verify.network_path, "network file")
        ->required();
    cmd_verify->add_option("--dataset", verify.dataset_path, "dataset file")
        ->required();

    btn::cli::table_options table;
    auto* cmd_table = app.add_subcommand(
        "table", "build and verify every applicable construction");
    cmd_table->add_option("--dataset", table.dataset_path, "dataset file")
        ->required();
    cmd_table->add_option("--seed", table.seed, "seed for the randomized rows")
        ->required();
    cmd_table->add_option("--max-attempts", table.max_attempts,
                          "resampling budget for randomized constructions");

    btn::cli::hardness_options hardness;
    auto* cmd_hardness = app.add_subcommand(
        "hardness", "emit the pair-incidence family, its encoder, and the "
                    "two-layer decoding obstruction certificate");
    cmd_hardness->add_option("--d", hardness.d, "instance parameter (2..6)")
        ->required();
    cmd_hardness->add_option("--out", hardness.out,
                             "optionally export the instance as a dataset file");

    btn::cli::export_dot_options dot;
    auto* cmd_dot = app.add_subcommand("export-dot", "render a network as DOT");
    cmd_dot->add_option("--network", dot.network_path, "network file")->required();
    cmd_dot->add_option("--out", dot.out, "output DOT path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return btn::cli::exit_usage;
    }

    if (*cmd_gen) return btn::cli::run_gen(gen, std::cout, std::cerr);
    if (*cmd_build) {
        if (*build_d_opt) build.d = build_d;
        if (*build_seed_opt) build.seed = build_seed;
        return btn::cli::run_build(build, std::cout, std::cerr);
    }
    if (*cmd_verify) return btn::cli::run_verify(verify, std::cout, std::cerr);
    if (*cmd_table) return btn::cli::run_table(table, std::cout, std::cerr);
    if (*cmd_hardness) return btn::cli::run_hardness(hardness, std::cout, std::cerr);
    if (*cmd_dot) return btn::cli::run_export_dot(dot, std::cout, std::cerr);
    return btn::cli::exit_usage;
}
