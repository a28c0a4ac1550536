#ifndef SPECBOUND_REPORT_HPP
#define SPECBOUND_REPORT_HPP

#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>

namespace specbound {

// Deterministic, locale-free formatting for CSV cells.
inline std::string fmt_double(double x, int precision = 10) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    return buf;
}

inline std::string fmt_opt_int(const std::optional<int>& x) {
    return x ? std::to_string(*x) : std::string();
}

// One graph's bound summary; missing optionals render as empty cells.
struct BoundReport {
    std::string graph_id;
    int n = 0;
    int m = 0;
    std::optional<int> alpha;
    std::optional<double> ratio;
    bool ratio_heuristic = false;
    int inertia_unweighted = 0;
    int clique_cover_bound = 0;
    std::optional<int> certificate_bound;

    static std::string csv_header() {
        return "graph,n,m,alpha,ratio,ratio_is_heuristic,inertia_unweighted,"
               "clique_cover_bound,certificate_bound";
    }

    std::string csv_row() const {
        std::string row = graph_id;
        row += ',' + std::to_string(n);
        row += ',' + std::to_string(m);
        row += ',' + fmt_opt_int(alpha);
        row += ',';
        if (ratio) row += fmt_double(*ratio);
        row += ratio ? (ratio_heuristic ? ",1" : ",0") : ",";
        row += ',' + std::to_string(inertia_unweighted);
        row += ',' + std::to_string(clique_cover_bound);
        row += ',' + fmt_opt_int(certificate_bound);
        return row;
    }

    // alpha never exceeds a sound upper bound; heuristic ratio values are
    // exempt because regularity was forced.
    void check_invariants() const {
        if (!alpha) return;
        if (ratio && !ratio_heuristic && static_cast<double>(*alpha) > *ratio + 1e-9)
            throw std::runtime_error("bound report: alpha " + std::to_string(*alpha) +
                                     " > ratio bound " + fmt_double(*ratio) + " on " + graph_id);
        if (*alpha > inertia_unweighted)
            throw std::runtime_error("bound report: alpha " + std::to_string(*alpha) +
                                     " > inertia bound " + std::to_string(inertia_unweighted) +
                                     " on " + graph_id);
        if (*alpha > clique_cover_bound)
            throw std::runtime_error("bound report: alpha " + std::to_string(*alpha) +
                                     " > clique cover bound " +
                                     std::to_string(clique_cover_bound) + " on " + graph_id);
    }
};

// One row of the gap experiment table.
struct ExperimentRow {
    std::string graph_id;
    int n = 0;
    std::optional<int> alpha;
    double ratio_heuristic = 0.0;
    double four_n_34 = 0.0;
    int inertia_unweighted = 0;
    int search_best = 0;
    int certificate_bound = 0;
    double beta_n = 0.0;
    double n_over_4 = 0.0;

    static std::string csv_header() {
        return "graph,n,alpha,ratio_heuristic,four_n_34,inertia_unweighted,search_best,"
               "certificate_bound,beta_n,n_over_4";
    }

    std::string csv_row() const {
        std::string row = graph_id;
        row += ',' + std::to_string(n);
        row += ',' + fmt_opt_int(alpha);
        row += ',' + fmt_double(ratio_heuristic);
        row += ',' + fmt_double(four_n_34);
        row += ',' + std::to_string(inertia_unweighted);
        row += ',' + std::to_string(search_best);
        row += ',' + std::to_string(certificate_bound);
        row += ',' + fmt_double(beta_n);
        row += ',' + fmt_double(n_over_4);
        return row;
    }

    void check_invariants() const {
        for (double v : {ratio_heuristic, four_n_34, beta_n, n_over_4})
            if (!std::isfinite(v))
                throw std::runtime_error("experiment row: non-finite field on " + graph_id);
        if (ratio_heuristic > four_n_34 + 1e-9)
            throw std::runtime_error("experiment assertion failed on " + graph_id +
                                     ": ratio value " + fmt_double(ratio_heuristic) +
                                     " > 4*n^(3/4) = " + fmt_double(four_n_34));
        int weakest = std::min(std::min(search_best, certificate_bound), inertia_unweighted);
        if (static_cast<double>(weakest) < n_over_4 - 1.0 - 1e-9)
            throw std::runtime_error(
                "experiment assertion failed on " + graph_id + ": min(search " +
                std::to_string(search_best) + ", certificate " +
                std::to_string(certificate_bound) + ", unweighted inertia " +
                std::to_string(inertia_unweighted) + ") < n/4 - 1 = " +
                fmt_double(n_over_4 - 1.0));
        if (certificate_bound > inertia_unweighted)
            throw std::runtime_error("experiment assertion failed on " + graph_id +
                                     ": certificate bound " + std::to_string(certificate_bound) +
                                     " > unweighted inertia " +
                                     std::to_string(inertia_unweighted));
        if (certificate_bound > search_best)
            throw std::runtime_error("experiment assertion failed on " + graph_id +
                                     ": certificate bound " + std::to_string(certificate_bound) +
                                     " > searched inertia " + std::to_string(search_best));
        if (alpha && *alpha > inertia_unweighted)
            throw std::runtime_error("experiment assertion failed on " + graph_id +
                                     ": alpha > unweighted inertia");
        if (alpha && *alpha > search_best)
            throw std::runtime_error("experiment assertion failed on " + graph_id +
                                     ": alpha > searched inertia");
    }
};

}  // namespace specbound

#endif
