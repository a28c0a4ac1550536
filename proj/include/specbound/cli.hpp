#ifndef SPECBOUND_CLI_HPP
#define SPECBOUND_CLI_HPP

#include <cmath>
#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "specbound/bounds.hpp"
#include "specbound/certificate.hpp"
#include "specbound/edge_io.hpp"
#include "specbound/exact.hpp"
#include "specbound/generators.hpp"
#include "specbound/graph.hpp"
#include "specbound/report.hpp"
#include "specbound/search.hpp"
#include "specbound/spectrum.hpp"
#include "specbound/weighting.hpp"

namespace specbound::cli {

namespace detail {

inline long long as_int(double x, const std::string& what) {
    double r = std::round(x);
    if (!std::isfinite(x) || std::abs(x - r) > 1e-9)
        throw std::invalid_argument(what + " must be an integer, got " + fmt_double(x));
    return static_cast<long long>(r);
}

inline void need_params(const std::vector<double>& params, std::size_t count,
                        const std::string& family, const std::string& usage) {
    if (params.size() != count)
        throw std::invalid_argument("family \"" + family + "\" expects " + usage);
}

inline std::string sanitize_id(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    return s;
}

}  // namespace detail

// Families: paley q | polarity q | gnp n p | cycle n | complete n |
// bipartite a b | petersen | remark d. Returns the graph and a stable id.
inline std::pair<Graph, std::string> build_named_graph(const std::string& family,
                                                       const std::vector<double>& params,
                                                       std::uint64_t seed = 1) {
    using detail::as_int;
    using detail::need_params;
    if (family == "paley") {
        need_params(params, 1, family, "one prime q = 1 mod 4");
        long long q = as_int(params[0], "q");
        return {gen_paley(static_cast<int>(q)), "paley(" + std::to_string(q) + ")"};
    }
    if (family == "polarity") {
        need_params(params, 1, family, "one prime q");
        long long q = as_int(params[0], "q");
        return {gen_polarity(static_cast<int>(q)), "polarity(" + std::to_string(q) + ")"};
    }
    if (family == "gnp") {
        need_params(params, 2, family, "n and p");
        long long n = as_int(params[0], "n");
        double p = params[1];
        return {gen_gnp(static_cast<int>(n), p, seed),
                "gnp(" + std::to_string(n) + "," + fmt_double(p) + ",seed=" +
                    std::to_string(seed) + ")"};
    }
    if (family == "cycle") {
        need_params(params, 1, family, "n >= 3");
        long long n = as_int(params[0], "n");
        return {gen_cycle(static_cast<int>(n)), "cycle(" + std::to_string(n) + ")"};
    }
    if (family == "complete") {
        need_params(params, 1, family, "n >= 1");
        long long n = as_int(params[0], "n");
        return {gen_complete(static_cast<int>(n)), "complete(" + std::to_string(n) + ")"};
    }
    if (family == "bipartite") {
        need_params(params, 2, family, "a and b");
        long long a = as_int(params[0], "a"), b = as_int(params[1], "b");
        return {gen_complete_bipartite(static_cast<int>(a), static_cast<int>(b)),
                "bipartite(" + std::to_string(a) + "," + std::to_string(b) + ")"};
    }
    if (family == "petersen") {
        need_params(params, 0, family, "no parameters");
        return {gen_petersen(), "petersen"};
    }
    if (family == "remark") {
        need_params(params, 1, family, "one d >= 1");
        long long d = as_int(params[0], "d");
        return {gen_remark(static_cast<int>(d)), "remark(" + std::to_string(d) + ")"};
    }
    throw std::invalid_argument(
        "unknown family \"" + family +
        "\" (known: paley, polarity, gnp, cycle, complete, bipartite, petersen, remark)");
}

// ---- gen --------------------------------------------------------------

struct GenOptions {
    std::string family;
    std::vector<double> params;
    std::string out_path;  // "-" streams the edge list to `out`
    std::uint64_t seed = 1;
};

inline void run_gen(const GenOptions& opts, std::ostream& out, std::ostream& summary) {
    auto [g, id] = build_named_graph(opts.family, opts.params, opts.seed);
    if (opts.out_path == "-")
        write_edge_list(out, g);
    else
        save_edge_list(opts.out_path, g);
    auto gi = girth(g);
    summary << id << ": n=" << g.vertex_count() << " m=" << g.edge_count()
            << " girth=" << (gi ? std::to_string(*gi) : std::string("inf"))
            << " c4free=" << (is_c4_free(g) ? "yes" : "no") << '\n';
}

// ---- format sniffing ---------------------------------------------------

// Edge lists open with "n m", weighting files with a single "n".
inline std::string detect_format(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::string line;
    while (std::getline(f, line)) {
        std::istringstream ss(line);
        std::string tok;
        int count = 0;
        while (ss >> tok) ++count;
        if (count == 0) continue;
        if (count == 1) return "weights";
        if (count == 2) return "edges";
        throw std::runtime_error(path + ": unrecognized header (expected \"n m\" or \"n\")");
    }
    throw std::runtime_error(path + ": empty file");
}

// ---- bounds -------------------------------------------------------------

struct BoundsOptions {
    std::string graph_path;
    std::string weights_path;  // optional
    int exact_limit = kDefaultExactLimit;
    double tau = -1.0;
    bool force_ratio = false;
};

inline BoundReport run_bounds(const BoundsOptions& opts, std::ostream& out) {
    auto host = std::make_shared<Graph>(load_edge_list(opts.graph_path));
    std::optional<HermitianWeighting> weights;
    if (!opts.weights_path.empty()) weights.emplace(load_weighting(opts.weights_path, host));

    BoundReport r;
    r.graph_id = detail::sanitize_id(opts.graph_path);
    r.n = host->vertex_count();
    r.m = host->edge_count();
    if (r.n <= opts.exact_limit) r.alpha = independence_number(*host, opts.exact_limit);

    HermitianWeighting ratio_input =
        weights ? *weights : HermitianWeighting::unweighted(host);
    try {
        r.ratio = ratio_bound(ratio_input, false);
        r.ratio_heuristic = false;
    } catch (const std::invalid_argument&) {
        if (opts.force_ratio) {
            try {
                r.ratio = ratio_bound(ratio_input, true);
                r.ratio_heuristic = true;
            } catch (const std::invalid_argument&) {
                r.ratio.reset();  // e.g. lambda_max <= 0 on an empty graph
            }
        }
    }

    r.inertia_unweighted = inertia_upper_bound(*host, opts.tau);
    r.clique_cover_bound = static_cast<int>(greedy_clique_cover(*host).size());
    r.check_invariants();

    out << "graph: " << r.graph_id << '\n';
    out << "n = " << r.n << ", m = " << r.m << '\n';
    if (r.alpha)
        out << "alpha (exact) = " << *r.alpha << '\n';
    else
        out << "alpha (exact) = skipped, n > " << opts.exact_limit << '\n';
    if (r.ratio)
        out << "ratio bound = " << fmt_double(*r.ratio)
            << (r.ratio_heuristic ? " (heuristic: row sums unequal)" : "") << '\n';
    else
        out << "ratio bound = unavailable (row sums unequal; pass --force-ratio)" << '\n';
    out << "inertia bound (unweighted) = " << r.inertia_unweighted << '\n';
    if (weights)
        out << "inertia bound (given weighting) = " << inertia_upper_bound(*weights, opts.tau)
            << '\n';
    out << "clique cover bound = " << r.clique_cover_bound << '\n';
    out << BoundReport::csv_header() << '\n' << r.csv_row() << '\n';
    return r;
}

// ---- certify -------------------------------------------------------------

struct CertifyCliOptions {
    std::string graph_path;
    std::string weights_path;                 // exclusive with random_seed
    std::optional<std::uint64_t> random_seed; // draw the weighting instead
    WeightLaw law = WeightLaw::GaussianReal;
    double tau = -1.0;
    SinkhornOptions scaling{};
    std::string json_out;  // optional path for the certificate JSON
};

struct CertifyOutcome {
    CertificateResult cert;
    int actual_nonneg = 0;
    int beta_floor = 0;
    std::optional<int> quarter_floor;
};

inline CertifyOutcome run_certify(const CertifyCliOptions& opts, std::ostream& out) {
    auto host = std::make_shared<Graph>(load_edge_list(opts.graph_path));
    if (!opts.weights_path.empty() && opts.random_seed)
        throw std::invalid_argument("certify: give either a weights file or a random seed");
    HermitianWeighting w =
        !opts.weights_path.empty() ? load_weighting(opts.weights_path, host)
        : opts.random_seed         ? random_weighting(host, *opts.random_seed, opts.law)
                                   : HermitianWeighting::unweighted(host);

    CertifyOptions copts;
    copts.scaling = opts.scaling;
    CertificateResult cert = certify_inertia(w, copts);
    cert.validate();

    // Serialization must round-trip before anyone is handed the JSON.
    std::string dump = cert.to_json().dump(2);
    {
        auto reparsed = CertificateResult::from_json(
            nlohmann::ordered_json::parse(dump));
        reparsed.validate();
        if (reparsed.to_json().dump(2) != dump)
            throw std::logic_error("certify: JSON round-trip is not the identity");
    }
    if (!opts.json_out.empty()) {
        std::ofstream f(opts.json_out);
        if (!f) throw std::runtime_error("cannot open for writing: " + opts.json_out);
        f << dump << '\n';
    } else {
        out << dump << '\n';
    }

    const int n = w.n();
    int actual = inertia_upper_bound(w, opts.tau);
    if (cert.bound > actual)
        throw std::runtime_error("certify: bound " + std::to_string(cert.bound) +
                                 " exceeds the eigendecomposition count " +
                                 std::to_string(actual) + ", which indicates a bug");
    int beta_floor =
        static_cast<int>(std::ceil(kPositiveMassFloor * static_cast<double>(n))) - 1;
    if (cert.bound < beta_floor)
        throw std::runtime_error("certify: bound " + std::to_string(cert.bound) +
                                 " below the guaranteed floor ceil(beta n) - 1 = " +
                                 std::to_string(beta_floor));
    std::optional<int> quarter_floor;
    if (cert.girth_ge5) {
        quarter_floor = static_cast<int>(std::ceil(static_cast<double>(n) / 4.0)) - 1;
        if (cert.bound < *quarter_floor)
            throw std::runtime_error("certify: bound " + std::to_string(cert.bound) +
                                     " below the girth-5 floor ceil(n/4) - 1 = " +
                                     std::to_string(*quarter_floor));
    }

    out << "certificate bound = " << cert.bound << '\n';
    out << "nonnegative eigenvalues (eigendecomposition) = " << actual << '\n';
    out << "floor ceil(beta n) - 1 = " << beta_floor
        << "  (beta = " << fmt_double(kPositiveMassFloor, 12) << ")" << '\n';
    if (quarter_floor) out << "floor ceil(n/4) - 1 = " << *quarter_floor << " (girth >= 5)\n";
    out << "verdict: ok (bound <= eigendecomposition count, floors respected)\n";
    return CertifyOutcome{std::move(cert), actual, beta_floor, quarter_floor};
}

// ---- spectrum -------------------------------------------------------------

struct SpectrumCliOptions {
    std::string input_path;
    std::string format = "auto";  // auto | edges | weights
    std::string out_path;         // empty or "-" streams to `out`
};

inline Spectrum run_spectrum(const SpectrumCliOptions& opts, std::ostream& out) {
    std::string format = opts.format == "auto" ? detect_format(opts.input_path) : opts.format;
    Spectrum s;
    if (format == "edges") {
        auto host = std::make_shared<Graph>(load_edge_list(opts.input_path));
        s = compute_spectrum(HermitianWeighting::unweighted(host));
    } else if (format == "weights") {
        s = compute_spectrum(load_weighting(opts.input_path));
    } else {
        throw std::invalid_argument("spectrum: format must be auto, edges, or weights");
    }
    auto emit = [&](std::ostream& os) {
        for (double v : s.values) os << fmt_double(v, 17) << '\n';
    };
    if (opts.out_path.empty() || opts.out_path == "-") {
        emit(out);
    } else {
        std::ofstream f(opts.out_path);
        if (!f) throw std::runtime_error("cannot open for writing: " + opts.out_path);
        emit(f);
    }
    return s;
}

// ---- experiment-gap --------------------------------------------------------

struct ExperimentOptions {
    std::vector<int> qs{3, 5, 7, 11, 13};
    std::uint64_t seed = 1;
    int restarts = 6;
    int steps = 30;
    WeightLaw law = WeightLaw::GaussianReal;
    int exact_limit = kDefaultExactLimit;
    double tau = -1.0;
    SinkhornOptions scaling{};
    std::string out_csv;       // optional file
    std::string gnuplot_path;  // optional companion plot script
};

// For each prime q: polarity graph, peeled to girth >= 5, then the full
// bound battery. Sub-seeds split as seed + 1000*k for the k-th q (search)
// and seed + 1000*k + 500 (certificate weighting), so rows never share
// randomness.
inline std::vector<ExperimentRow> run_experiment_gap(const ExperimentOptions& opts,
                                                     std::ostream& out) {
    std::vector<ExperimentRow> rows;
    std::ostringstream csv;
    csv << ExperimentRow::csv_header() << '\n';
    for (std::size_t k = 0; k < opts.qs.size(); ++k) {
        int q = opts.qs[k];
        Graph base = gen_polarity(q);
        ExtractResult ex = extract_girth5(base);
        auto host = std::make_shared<Graph>(std::move(ex.subgraph));
        const int n = host->vertex_count();

        ExperimentRow row;
        row.graph_id = "polarity(" + std::to_string(q) + ")-girth5";
        row.n = n;
        if (n <= opts.exact_limit) row.alpha = independence_number(*host, opts.exact_limit);
        row.ratio_heuristic =
            host->edge_count() > 0 ? ratio_bound(HermitianWeighting::unweighted(host), true) : 0.0;
        row.four_n_34 = 4.0 * std::pow(static_cast<double>(n), 0.75);
        row.inertia_unweighted = inertia_upper_bound(*host, opts.tau);

        WeightSearchOptions sopts;
        sopts.seed = opts.seed + 1000 * static_cast<std::uint64_t>(k);
        sopts.restarts = opts.restarts;
        sopts.steps = opts.steps;
        sopts.law = opts.law;
        sopts.exact_limit = opts.exact_limit;
        sopts.tau = opts.tau;
        row.search_best = weight_search(host, sopts).best_nonneg;

        HermitianWeighting cw = random_weighting(
            host, opts.seed + 1000 * static_cast<std::uint64_t>(k) + 500, opts.law);
        CertifyOptions copts;
        copts.scaling = opts.scaling;
        CertificateResult cert = certify_inertia(cw, copts);
        row.certificate_bound = cert.bound;
        if (!cert.girth_ge5)
            throw std::logic_error("experiment: extracted subgraph failed the girth check");
        int quarter_floor = static_cast<int>(std::ceil(static_cast<double>(n) / 4.0)) - 1;
        if (cert.bound < quarter_floor)
            throw std::runtime_error("experiment assertion failed on " + row.graph_id +
                                     ": certificate bound " + std::to_string(cert.bound) +
                                     " < ceil(n/4) - 1 = " + std::to_string(quarter_floor));
        row.beta_n = kPositiveMassFloor * static_cast<double>(n);
        row.n_over_4 = static_cast<double>(n) / 4.0;
        row.check_invariants();
        rows.push_back(row);
        csv << row.csv_row() << '\n';
    }

    out << csv.str();
    if (!opts.out_csv.empty()) {
        std::ofstream f(opts.out_csv);
        if (!f) throw std::runtime_error("cannot open for writing: " + opts.out_csv);
        f << csv.str();
    }
    if (!opts.gnuplot_path.empty()) {
        std::ofstream f(opts.gnuplot_path);
        if (!f) throw std::runtime_error("cannot open for writing: " + opts.gnuplot_path);
        std::string src = opts.out_csv.empty() ? "gap.csv" : opts.out_csv;
        f << "set datafile separator \",\"\n"
          << "set key outside\n"
          << "set xlabel \"n\"\n"
          << "set ylabel \"bound value\"\n"
          << "plot \"" << src << "\" every ::1 using 2:4 with linespoints title \"ratio (heuristic)\", \\\n"
          << "     \"" << src << "\" every ::1 using 2:5 with linespoints title \"4 n^{3/4}\", \\\n"
          << "     \"" << src << "\" every ::1 using 2:7 with linespoints title \"searched inertia\", \\\n"
          << "     \"" << src << "\" every ::1 using 2:8 with linespoints title \"certificate\", \\\n"
          << "     \"" << src << "\" every ::1 using 2:9 with lines title \"beta n\", \\\n"
          << "     \"" << src << "\" every ::1 using 2:10 with lines title \"n/4\"\n";
    }
    return rows;
}

}  // namespace specbound::cli

#endif
