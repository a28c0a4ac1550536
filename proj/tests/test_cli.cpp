#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "specbound/cli.hpp"
#include "test_util.hpp"

using namespace specbound;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

namespace fs = std::filesystem;

fs::path temp_path(const std::string& name) {
    return fs::temp_directory_path() / ("specbound_cli_" + name);
}

std::string write_graph_file(const Graph& g, const std::string& name) {
    auto p = temp_path(name);
    save_edge_list(p.string(), g);
    return p.string();
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("named graph builder covers every family", "[cli]") {
    auto [paley, paley_id] = cli::build_named_graph("paley", {17});
    REQUIRE(paley.vertex_count() == 17);
    REQUIRE(paley.edge_count() == 68);
    REQUIRE(paley_id == "paley(17)");

    auto [pol, pol_id] = cli::build_named_graph("polarity", {2});
    REQUIRE(pol.vertex_count() == 7);
    REQUIRE(pol.edge_count() == 9);
    REQUIRE(pol_id == "polarity(2)");

    auto [gnp, gnp_id] = cli::build_named_graph("gnp", {40, 0.5}, 1);
    REQUIRE(gnp.vertex_count() == 40);
    REQUIRE(gnp_id == "gnp(40,0.5,seed=1)");

    REQUIRE(cli::build_named_graph("cycle", {6}).first.edge_count() == 6);
    REQUIRE(cli::build_named_graph("complete", {4}).first.edge_count() == 6);
    REQUIRE(cli::build_named_graph("bipartite", {3, 4}).first.edge_count() == 12);
    REQUIRE(cli::build_named_graph("petersen", {}).first.vertex_count() == 10);

    auto [rem, rem_id] = cli::build_named_graph("remark", {3});
    REQUIRE(rem.vertex_count() == 18);
    REQUIRE(rem.edge_count() == 27);
    REQUIRE(rem_id == "remark(3)");

    SECTION("errors name the problem") {
        REQUIRE_THROWS_WITH(cli::build_named_graph("hypercube", {3}),
                            ContainsSubstring("unknown family"));
        REQUIRE_THROWS_WITH(cli::build_named_graph("paley", {}),
                            ContainsSubstring("expects one prime"));
        REQUIRE_THROWS_WITH(cli::build_named_graph("paley", {4.5}),
                            ContainsSubstring("must be an integer"));
        REQUIRE_THROWS_WITH(cli::build_named_graph("gnp", {10}), ContainsSubstring("expects"));
    }
}

TEST_CASE("csv formatting helpers", "[cli]") {
    REQUIRE(fmt_double(2.0) == "2");
    REQUIRE(fmt_double(0.5) == "0.5");
    REQUIRE(fmt_double(std::sqrt(17.0)) == "4.123105626");
    REQUIRE(cli::detail::sanitize_id("a,b\nc") == "a;b;c");

    SECTION("bound report row layout") {
        BoundReport r;
        r.graph_id = "g";
        r.n = 5;
        r.m = 4;
        r.alpha = 2;
        r.ratio = 2.5;
        r.inertia_unweighted = 3;
        r.clique_cover_bound = 3;
        r.certificate_bound = 2;
        REQUIRE(r.csv_row() == "g,5,4,2,2.5,0,3,3,2");
        r.alpha.reset();
        r.ratio.reset();
        r.certificate_bound.reset();
        REQUIRE(r.csv_row() == "g,5,4,,,,3,3,");
    }
    SECTION("experiment row invariants name the violated inequality") {
        ExperimentRow row;
        row.graph_id = "x";
        row.n = 10;
        row.ratio_heuristic = 5.0;
        row.four_n_34 = 4.0 * std::pow(10.0, 0.75);
        row.inertia_unweighted = 6;
        row.search_best = 4;
        row.certificate_bound = 5;
        row.beta_n = 2.3;
        row.n_over_4 = 2.5;
        REQUIRE_THROWS_WITH(row.check_invariants(), ContainsSubstring("> searched inertia"));
        row.certificate_bound = 3;
        REQUIRE_NOTHROW(row.check_invariants());
        row.ratio_heuristic = 100.0;
        REQUIRE_THROWS_WITH(row.check_invariants(), ContainsSubstring("4*n^(3/4)"));
    }
}

TEST_CASE("graph generation command", "[cli]") {
    SECTION("writes a loadable edge list and a one-line summary") {
        auto out_file = temp_path("gen_paley.txt");
        cli::GenOptions opts;
        opts.family = "paley";
        opts.params = {17};
        opts.out_path = out_file.string();
        std::ostringstream out, summary;
        cli::run_gen(opts, out, summary);
        REQUIRE(out.str().empty());
        REQUIRE_THAT(summary.str(), ContainsSubstring("paley(17): n=17 m=68"));
        Graph g = load_edge_list(out_file.string());
        REQUIRE(g.vertex_count() == 17);
        REQUIRE(g.edge_count() == 68);
    }
    SECTION("frozen summaries carry girth and 4-cycle status") {
        cli::GenOptions opts;
        opts.family = "cycle";
        opts.params = {6};
        opts.out_path = "-";
        std::ostringstream out, summary;
        cli::run_gen(opts, out, summary);
        REQUIRE(summary.str() == "cycle(6): n=6 m=6 girth=6 c4free=yes\n");
        REQUIRE_THAT(out.str(), ContainsSubstring("6 6\n0 1\n"));

        cli::GenOptions pet;
        pet.family = "petersen";
        pet.out_path = "-";
        std::ostringstream out2, summary2;
        cli::run_gen(pet, out2, summary2);
        REQUIRE(summary2.str() == "petersen: n=10 m=15 girth=5 c4free=yes\n");

        cli::GenOptions forest;
        forest.family = "bipartite";
        forest.params = {1, 3};
        forest.out_path = "-";
        std::ostringstream out3, summary3;
        cli::run_gen(forest, out3, summary3);
        REQUIRE(summary3.str() == "bipartite(1,3): n=4 m=3 girth=inf c4free=yes\n");
    }
}

TEST_CASE("input format sniffing", "[cli]") {
    auto edges = write_graph_file(gen_cycle(5), "sniff_edges.txt");
    REQUIRE(cli::detect_format(edges) == "edges");

    auto weights = temp_path("sniff_weights.txt");
    save_weighting(weights.string(),
                   HermitianWeighting::unweighted(testutil::shared(gen_cycle(5))));
    REQUIRE(cli::detect_format(weights.string()) == "weights");

    auto bad = temp_path("sniff_bad.txt");
    std::ofstream(bad.string()) << "1 2 3\n";
    REQUIRE_THROWS_WITH(cli::detect_format(bad.string()), ContainsSubstring("unrecognized header"));

    auto empty = temp_path("sniff_empty.txt");
    std::ofstream(empty.string()) << "";
    REQUIRE_THROWS_WITH(cli::detect_format(empty.string()), ContainsSubstring("empty file"));

    REQUIRE_THROWS_WITH(cli::detect_format("/nonexistent/x.txt"), ContainsSubstring("cannot open"));
}

TEST_CASE("bounds command on a quadratic-residue graph", "[cli]") {
    auto path = write_graph_file(gen_paley(17), "bounds_paley.txt");
    cli::BoundsOptions opts;
    opts.graph_path = path;
    std::ostringstream out;
    BoundReport r = cli::run_bounds(opts, out);

    REQUIRE(r.n == 17);
    REQUIRE(r.m == 68);
    REQUIRE(r.alpha == 3);
    REQUIRE(r.ratio.has_value());
    REQUIRE_THAT(*r.ratio, WithinAbs(std::sqrt(17.0), 1e-9));
    REQUIRE_FALSE(r.ratio_heuristic);
    REQUIRE(r.inertia_unweighted == 9);
    REQUIRE(r.clique_cover_bound ==
            static_cast<int>(greedy_clique_cover(gen_paley(17)).size()));
    REQUIRE_NOTHROW(r.check_invariants());

    REQUIRE_THAT(out.str(), ContainsSubstring("alpha (exact) = 3"));
    REQUIRE_THAT(out.str(), ContainsSubstring("ratio bound = 4.123105626"));
    REQUIRE_THAT(out.str(), ContainsSubstring("inertia bound (unweighted) = 9"));
    REQUIRE_THAT(out.str(), ContainsSubstring(BoundReport::csv_header()));
    REQUIRE_THAT(out.str(), ContainsSubstring(r.csv_row()));
}

TEST_CASE("bounds command with a weighting and forced ratio", "[cli]") {
    SECTION("sharp per-component weighting on the matching-plus-cliques family") {
        Graph g = gen_remark(3);
        auto path = write_graph_file(g, "bounds_remark.txt");
        auto wpath = temp_path("bounds_remark_w.txt");
        save_weighting(wpath.string(), bipartite_block_weighting(g));

        cli::BoundsOptions opts;
        opts.graph_path = path;
        opts.weights_path = wpath.string();
        std::ostringstream out;
        BoundReport r = cli::run_bounds(opts, out);

        REQUIRE(r.alpha == 6);
        REQUIRE(r.inertia_unweighted == 8);
        // The weighting is not row-regular, so the strict ratio is unavailable.
        REQUIRE_FALSE(r.ratio.has_value());
        REQUIRE_THAT(out.str(), ContainsSubstring("ratio bound = unavailable"));
        REQUIRE_THAT(out.str(), ContainsSubstring("inertia bound (given weighting) = 6"));
    }
    SECTION("forcing the ratio marks it heuristic") {
        Graph p3(3);
        p3.add_edge(0, 1);
        p3.add_edge(1, 2);
        auto path = write_graph_file(p3, "bounds_p3.txt");
        cli::BoundsOptions opts;
        opts.graph_path = path;
        opts.force_ratio = true;
        std::ostringstream out;
        BoundReport r = cli::run_bounds(opts, out);
        REQUIRE(r.ratio_heuristic);
        REQUIRE_THAT(*r.ratio, WithinAbs(1.5, 1e-9));
        REQUIRE_THAT(out.str(), ContainsSubstring("(heuristic: row sums unequal)"));
        REQUIRE_THAT(out.str(), ContainsSubstring(",1.5,1,"));
    }
    SECTION("edgeless graphs have no ratio even when forced") {
        auto path = write_graph_file(Graph(3), "bounds_empty.txt");
        cli::BoundsOptions opts;
        opts.graph_path = path;
        opts.force_ratio = true;
        std::ostringstream out;
        BoundReport r = cli::run_bounds(opts, out);
        REQUIRE_FALSE(r.ratio.has_value());
        REQUIRE(r.alpha == 3);
        REQUIRE(r.inertia_unweighted == 3);
        REQUIRE(r.clique_cover_bound == 3);
    }
}

TEST_CASE("certify command end to end", "[cli]") {
    SECTION("pentagon, unweighted") {
        auto path = write_graph_file(gen_cycle(5), "certify_c5.txt");
        cli::CertifyCliOptions opts;
        opts.graph_path = path;
        std::ostringstream out;
        auto outcome = cli::run_certify(opts, out);
        REQUIRE(outcome.cert.bound == 2);
        REQUIRE(outcome.actual_nonneg == 3);
        REQUIRE(outcome.beta_floor == 1);
        REQUIRE(outcome.quarter_floor == 1);
        REQUIRE_THAT(out.str(), ContainsSubstring("\"schema\": \"specbound.certificate/1\""));
        REQUIRE_THAT(out.str(), ContainsSubstring("certificate bound = 2"));
        REQUIRE_THAT(out.str(),
                     ContainsSubstring("nonnegative eigenvalues (eigendecomposition) = 3"));
        REQUIRE_THAT(out.str(), ContainsSubstring("verdict: ok"));
    }
    SECTION("star meets its eigendecomposition count") {
        auto path = write_graph_file(gen_complete_bipartite(1, 9), "certify_star.txt");
        cli::CertifyCliOptions opts;
        opts.graph_path = path;
        std::ostringstream out;
        auto outcome = cli::run_certify(opts, out);
        REQUIRE(outcome.cert.bound == 9);
        REQUIRE(outcome.actual_nonneg == 9);
        REQUIRE(outcome.quarter_floor == 2);
    }
    SECTION("4-cycle hosts are refused") {
        auto path = write_graph_file(gen_cycle(4), "certify_c4.txt");
        cli::CertifyCliOptions opts;
        opts.graph_path = path;
        std::ostringstream out;
        REQUIRE_THROWS_WITH(cli::run_certify(opts, out), ContainsSubstring("4-cycle"));
    }
    SECTION("random weightings are reproducible and exclusive with files") {
        auto path = write_graph_file(gen_polarity(3), "certify_pol3.txt");
        cli::CertifyCliOptions opts;
        opts.graph_path = path;
        opts.random_seed = 5;
        opts.law = WeightLaw::GaussianComplex;
        std::ostringstream out1, out2;
        auto a = cli::run_certify(opts, out1);
        auto b = cli::run_certify(opts, out2);
        REQUIRE(a.cert.bound == b.cert.bound);
        REQUIRE(out1.str() == out2.str());

        opts.weights_path = "also.txt";
        REQUIRE_THROWS_WITH(cli::run_certify(opts, out1),
                            ContainsSubstring("either a weights file or a random seed"));
    }
    SECTION("weights file input and JSON to a file") {
        auto host = testutil::shared(gen_polarity(3));
        auto path = write_graph_file(*host, "certify_pol3b.txt");
        auto wpath = temp_path("certify_pol3_w.txt");
        save_weighting(wpath.string(), random_weighting(host, 8, WeightLaw::GaussianReal));
        auto jpath = temp_path("certify_pol3.json");

        cli::CertifyCliOptions opts;
        opts.graph_path = path;
        opts.weights_path = wpath.string();
        opts.json_out = jpath.string();
        std::ostringstream out;
        auto outcome = cli::run_certify(opts, out);

        REQUIRE(outcome.cert.bound <= outcome.actual_nonneg);
        REQUIRE_THAT(out.str(), !ContainsSubstring("\"schema\""));
        std::string filed = slurp(jpath.string());
        REQUIRE(filed == outcome.cert.to_json().dump(2) + "\n");
        auto back = CertificateResult::from_json(nlohmann::ordered_json::parse(filed));
        REQUIRE_NOTHROW(back.validate());
    }
}

TEST_CASE("spectrum command", "[cli]") {
    SECTION("edge list input, sniffed") {
        auto path = write_graph_file(gen_cycle(5), "spectrum_c5.txt");
        cli::SpectrumCliOptions opts;
        opts.input_path = path;
        std::ostringstream out;
        Spectrum s = cli::run_spectrum(opts, out);
        REQUIRE(s.n() == 5);
        REQUIRE_THAT(s.lambda_max(), WithinAbs(2.0, 1e-9));

        std::istringstream lines(out.str());
        std::string line;
        std::vector<double> parsed;
        while (std::getline(lines, line)) parsed.push_back(std::stod(line));
        REQUIRE(parsed.size() == 5);
        for (std::size_t k = 0; k < 5; ++k) REQUIRE(parsed[k] == s.values[k]);  // %.17g exact
    }
    SECTION("weighting input, sniffed and overridden") {
        Graph k2(2);
        k2.add_edge(0, 1);
        auto wpath = temp_path("spectrum_k2_w.txt");
        save_weighting(wpath.string(),
                       testutil::weighting_of(k2, {{0, 1, {3.0, 0.0}}}));

        cli::SpectrumCliOptions opts;
        opts.input_path = wpath.string();
        std::ostringstream out;
        Spectrum s = cli::run_spectrum(opts, out);
        REQUIRE(s.n() == 2);
        REQUIRE_THAT(s.values[0], WithinAbs(3.0, 1e-12));
        REQUIRE_THAT(s.values[1], WithinAbs(-3.0, 1e-12));

        opts.format = "edges";  // misreading a weights file must fail loudly
        REQUIRE_THROWS_AS(cli::run_spectrum(opts, out), ParseError);
        opts.format = "csv";
        REQUIRE_THROWS_WITH(cli::run_spectrum(opts, out), ContainsSubstring("format must be"));
    }
    SECTION("output file") {
        auto path = write_graph_file(gen_complete(2), "spectrum_k2.txt");
        auto opath = temp_path("spectrum_k2_out.txt");
        cli::SpectrumCliOptions opts;
        opts.input_path = path;
        opts.out_path = opath.string();
        std::ostringstream out;
        Spectrum s = cli::run_spectrum(opts, out);
        REQUIRE(out.str().empty());
        std::istringstream lines(slurp(opath.string()));
        std::string line;
        std::vector<double> parsed;
        while (std::getline(lines, line)) parsed.push_back(std::stod(line));
        REQUIRE(parsed.size() == 2);
        REQUIRE(parsed[0] == s.values[0]);  // %.17g round-trips exactly
        REQUIRE(parsed[1] == s.values[1]);
        REQUIRE_THAT(parsed[0], WithinAbs(1.0, 1e-12));
        REQUIRE_THAT(parsed[1], WithinAbs(-1.0, 1e-12));
    }
}

TEST_CASE("gap experiment produces stable, audited rows", "[cli]") {
    cli::ExperimentOptions opts;
    opts.qs = {3, 5};
    opts.restarts = 2;
    opts.steps = 5;
    auto csv_path = temp_path("gap.csv");
    auto plot_path = temp_path("gap.gp");
    opts.out_csv = csv_path.string();
    opts.gnuplot_path = plot_path.string();

    std::ostringstream out1;
    auto rows = cli::run_experiment_gap(opts, out1);
    REQUIRE(rows.size() == 2);
    REQUIRE(rows[0].graph_id == "polarity(3)-girth5");
    REQUIRE(rows[1].graph_id == "polarity(5)-girth5");
    REQUIRE(rows[0].n > 0);
    REQUIRE(rows[1].n > rows[0].n);
    REQUIRE(rows[0].alpha.has_value());
    REQUIRE(rows[1].alpha.has_value());
    for (const auto& row : rows) REQUIRE_NOTHROW(row.check_invariants());

    SECTION("output is byte-identical across runs") {
        std::ostringstream out2;
        cli::run_experiment_gap(opts, out2);
        REQUIRE(out1.str() == out2.str());
    }
    SECTION("files mirror the stream and the plot reads the right columns") {
        REQUIRE(slurp(csv_path.string()) == out1.str());
        std::string plot = slurp(plot_path.string());
        REQUIRE_THAT(plot, ContainsSubstring("plot \"" + csv_path.string() + "\""));
        REQUIRE_THAT(plot, ContainsSubstring("every ::1"));
        REQUIRE_THAT(plot, ContainsSubstring("using 2:8"));
    }
    SECTION("header layout is frozen") {
        REQUIRE_THAT(out1.str(),
                     ContainsSubstring("graph,n,alpha,ratio_heuristic,four_n_34,"
                                       "inertia_unweighted,search_best,certificate_bound,"
                                       "beta_n,n_over_4\n"));
    }
}
