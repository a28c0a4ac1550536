#ifndef SPECBOUND_SEARCH_HPP
#define SPECBOUND_SEARCH_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "specbound/exact.hpp"
#include "specbound/graph.hpp"
#include "specbound/rng.hpp"
#include "specbound/spectrum.hpp"
#include "specbound/weighting.hpp"

namespace specbound {

struct WeightSearchOptions {
    std::uint64_t seed = 1;
    int restarts = 50;
    int steps = 100;
    WeightLaw law = WeightLaw::GaussianReal;
    double sigma = 0.5;           // proposal step size
    int exact_limit = kDefaultExactLimit;
    double tau = -1.0;            // zero-band threshold; < 0 picks the default
};

struct WeightSearchResult {
    HermitianWeighting best;
    int best_nonneg = 0;
    double best_band = 0.0;       // sum of |lambda| over the zero band, the tiebreaker
    std::optional<int> alpha;     // exact independence number when cheap to get
};

// Random-restart local descent on edge weights, minimizing the number of
// nonnegative eigenvalues (ties broken by total weight of the zero band,
// which rewards pushing borderline eigenvalues negative). Restart 0 is
// always the plain 0/1 adjacency; restart i draws from `law` with seed
// seed+i, so runs are reproducible and extending `restarts` only appends.
inline WeightSearchResult weight_search(std::shared_ptr<const Graph> g,
                                        const WeightSearchOptions& opts = {}) {
    if (!g) throw std::invalid_argument("weight_search: null graph");
    if (opts.restarts < 1) throw std::invalid_argument("weight_search: restarts must be >= 1");
    if (opts.steps < 0) throw std::invalid_argument("weight_search: steps must be >= 0");
    const auto edges = g->edges();

    auto eval = [&](const Eigen::MatrixXcd& m) {
        Spectrum s = compute_spectrum(m);
        InertiaTriple t = inertia(s, opts.tau);
        double band = 0.0;
        for (double v : s.values)
            if (std::abs(v) <= t.tau) band += std::abs(v);
        return std::pair<int, double>(t.nonneg(), band);
    };
    auto better = [](const std::pair<int, double>& a, const std::pair<int, double>& b) {
        return a.first != b.first ? a.first < b.first : a.second < b.second;
    };

    Eigen::MatrixXcd best_m = HermitianWeighting::unweighted(g).matrix();
    std::pair<int, double> best_score = eval(best_m);

    for (int r = 0; r < opts.restarts; ++r) {
        Eigen::MatrixXcd cur =
            r == 0 ? HermitianWeighting::unweighted(g).matrix()
                   : random_weighting(g, opts.seed + static_cast<std::uint64_t>(r), opts.law)
                         .matrix();
        std::pair<int, double> cur_score = r == 0 ? best_score : eval(cur);
        if (!edges.empty()) {
            // Separate proposal stream so it never collides with the draw above.
            std::mt19937_64 prng((opts.seed + static_cast<std::uint64_t>(r)) ^
                                 0xda3e39cb94b95bdbULL);
            bool complex_law = opts.law != WeightLaw::GaussianReal;
            for (int step = 0; step < opts.steps; ++step) {
                auto [u, v] = edges[static_cast<std::size_t>(
                    rng::below(prng, static_cast<std::uint64_t>(edges.size())))];
                std::complex<double> z = cur(u, v);
                switch (rng::below(prng, 3)) {
                    case 0:
                        z += opts.sigma * rng::normal(prng);
                        break;
                    case 1:
                        if (complex_law)
                            z += std::complex<double>(0.0, opts.sigma * rng::normal(prng));
                        else
                            z += opts.sigma * rng::normal(prng);
                        break;
                    default:
                        z = -z;
                        break;
                }
                std::complex<double> saved = cur(u, v);
                cur(u, v) = z;
                cur(v, u) = std::conj(z);
                auto score = eval(cur);
                if (better(score, cur_score)) {
                    cur_score = score;
                } else {
                    cur(u, v) = saved;
                    cur(v, u) = std::conj(saved);
                }
            }
        }
        if (better(cur_score, best_score)) {
            best_score = cur_score;
            best_m = cur;
        }
    }

    WeightSearchResult result{HermitianWeighting(g, std::move(best_m)), best_score.first,
                              best_score.second, std::nullopt};
    if (g->vertex_count() <= opts.exact_limit) {
        result.alpha = independence_number(*g, opts.exact_limit);
        if (result.best_nonneg < *result.alpha)
            throw std::logic_error(
                "weight_search: found " + std::to_string(result.best_nonneg) +
                " nonnegative eigenvalues but alpha = " + std::to_string(*result.alpha) +
                "; the eigenvalue-count bound was violated, which indicates a bug");
    }
    return result;
}

}  // namespace specbound

#endif
