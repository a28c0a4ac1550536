#include <CLI11.hpp>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "specbound/specbound.hpp"

using namespace specbound;

int main(int argc, char** argv) {
    CLI::App app{"specbound: spectral bounds on graph independence numbers"};
    app.require_subcommand(1);
    app.footer(
        "Seed splitting (deterministic): weight search restart i draws with seed+i;\n"
        "experiment-gap row k (0-based) searches with seed+1000*k and certifies a\n"
        "weighting drawn with seed+1000*k+500.");

    const std::vector<std::string> laws{"unit-complex", "gaussian-real", "gaussian-complex"};

    // gen
    cli::GenOptions gen_opts;
    auto* gen = app.add_subcommand("gen", "generate a named graph as an edge-list file");
    gen->add_option("family", gen_opts.family,
                    "paley | polarity | gnp | cycle | complete | bipartite | petersen | remark")
        ->required();
    gen->add_option("params", gen_opts.params, "family parameters, e.g. `paley 17` or `gnp 40 0.5`");
    gen->add_option("-o,--out", gen_opts.out_path, "output path (- for stdout)")
        ->default_val("-");
    gen->add_option("--seed", gen_opts.seed, "random seed (gnp only)")->default_val(1);

    // bounds
    cli::BoundsOptions bounds_opts;
    auto* bounds = app.add_subcommand("bounds", "report alpha and its upper bounds for a graph");
    bounds->add_option("graph", bounds_opts.graph_path, "edge-list file")->required();
    bounds->add_option("-w,--weights", bounds_opts.weights_path, "weighting file for the graph");
    bounds->add_option("--exact-limit", bounds_opts.exact_limit,
                       "largest n for the exact independence solver")
        ->default_val(kDefaultExactLimit);
    bounds->add_option("--tau", bounds_opts.tau, "zero-band threshold (<0 = scale-aware default)")
        ->default_val(-1.0);
    bounds->add_flag("--force-ratio", bounds_opts.force_ratio,
                     "report the ratio quantity even when row sums are unequal (heuristic)");

    // certify
    cli::CertifyCliOptions cert_opts;
    std::string cert_law = "gaussian-real";
    std::optional<std::uint64_t> cert_random;
    auto* certify = app.add_subcommand(
        "certify", "certified lower bound on the nonnegative eigenvalue count (host must have no 4-cycle)");
    certify->add_option("graph", cert_opts.graph_path, "edge-list file")->required();
    certify->add_option("-w,--weights", cert_opts.weights_path, "weighting file for the graph");
    certify->add_option("--random", cert_random,
                        "draw a random weighting with this seed instead of a weights file");
    certify->add_option("--law", cert_law, "weight law for --random")
        ->check(CLI::IsMember(laws))
        ->default_val("gaussian-real");
    certify->add_option("--tau", cert_opts.tau, "zero-band threshold for the eigen cross-check")
        ->default_val(-1.0);
    certify->add_option("--tol-scaling", cert_opts.scaling.tol, "row-sum tolerance for scaling")
        ->default_val(1e-12);
    certify->add_option("--max-iter-scaling", cert_opts.scaling.max_iter,
                        "iteration cap for scaling")
        ->default_val(100000);
    certify->add_option("-o,--out", cert_opts.json_out, "write the certificate JSON here");

    // spectrum
    cli::SpectrumCliOptions spec_opts;
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of a graph or weighting, descending");
    spectrum->add_option("input", spec_opts.input_path, "edge-list or weighting file")->required();
    spectrum->add_option("--format", spec_opts.format, "auto | edges | weights")
        ->check(CLI::IsMember({"auto", "edges", "weights"}))
        ->default_val("auto");
    spectrum->add_option("-o,--out", spec_opts.out_path, "output path (- for stdout)")
        ->default_val("-");

    // experiment-gap
    cli::ExperimentOptions exp_opts;
    std::string exp_law = "gaussian-real";
    auto* experiment = app.add_subcommand(
        "experiment-gap", "ratio vs inertia gap table on girth-5 subgraphs of polarity graphs");
    experiment->add_option("--q", exp_opts.qs, "prime orders of the polarity graphs")
        ->default_val(std::vector<int>{3, 5, 7, 11, 13});
    experiment->add_option("--seed", exp_opts.seed, "master seed")->default_val(1);
    experiment->add_option("--restarts", exp_opts.restarts, "weight search restarts per graph")
        ->default_val(6);
    experiment->add_option("--steps", exp_opts.steps, "weight search steps per restart")
        ->default_val(30);
    experiment->add_option("--law", exp_law, "weight law for search and certificates")
        ->check(CLI::IsMember(laws))
        ->default_val("gaussian-real");
    experiment->add_option("--exact-limit", exp_opts.exact_limit,
                           "largest n for the exact independence solver")
        ->default_val(kDefaultExactLimit);
    experiment->add_option("--tau", exp_opts.tau, "zero-band threshold")->default_val(-1.0);
    experiment->add_option("--tol-scaling", exp_opts.scaling.tol, "row-sum tolerance for scaling")
        ->default_val(1e-12);
    experiment->add_option("-o,--out", exp_opts.out_csv, "also write the CSV here");
    experiment->add_option("--gnuplot", exp_opts.gnuplot_path,
                           "write a gnuplot script plotting the CSV");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) cli::run_gen(gen_opts, std::cout, gen_opts.out_path == "-" ? std::cerr : std::cout);
        if (*bounds) cli::run_bounds(bounds_opts, std::cout);
        if (*certify) {
            cert_opts.random_seed = cert_random;
            cert_opts.law = parse_weight_law(cert_law);
            cli::run_certify(cert_opts, std::cout);
        }
        if (*spectrum) cli::run_spectrum(spec_opts, std::cout);
        if (*experiment) {
            exp_opts.law = parse_weight_law(exp_law);
            cli::run_experiment_gap(exp_opts, std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
