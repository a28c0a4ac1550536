#ifndef SPECBOUND_BOUNDS_HPP
#define SPECBOUND_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "specbound/exact.hpp"
#include "specbound/graph.hpp"
#include "specbound/spectrum.hpp"
#include "specbound/weighting.hpp"

namespace specbound {

// Guaranteed fraction of positive mass for a mean-zero, unit-variance
// law with fourth moment 2: P(X > 0) >= sqrt(3) - 3/2.
inline constexpr double kPositiveMassFloor = std::numbers::sqrt3 - 1.5;

// Eigenvalue-gap bound on independent sets: alpha <= n * |l_min| / (l_max - l_min).
// Valid when all row sums are equal (weighted regularity); `force` skips
// that check and the value becomes a heuristic.
inline double ratio_bound(const HermitianWeighting& w, bool force = false) {
    const int n = w.n();
    if (n == 0) return 0.0;
    if (!force) {
        std::complex<double> mean = 0.0;
        for (int i = 0; i < n; ++i) mean += w.matrix().row(i).sum();
        mean /= static_cast<double>(n);
        double dev = 0.0;
        for (int i = 0; i < n; ++i)
            dev = std::max(dev, std::abs(std::complex<double>(w.matrix().row(i).sum()) - mean));
        if (dev > 1e-8 * std::max(1.0, std::abs(mean)))
            throw std::invalid_argument(
                "ratio_bound: row sums differ by " + std::to_string(dev) +
                "; weighting is not regular (pass force=true for a heuristic value)");
    }
    Spectrum s = compute_spectrum(w);
    double lmax = s.lambda_max(), lmin = s.lambda_min();
    if (!(lmax > 0.0))
        throw std::invalid_argument("ratio_bound: lambda_max must be positive, got " +
                                    std::to_string(lmax));
    return std::abs(lmin / (lmax - lmin)) * static_cast<double>(n);
}

inline double ratio_bound(const Graph& g, bool force = false) {
    return ratio_bound(HermitianWeighting::unweighted(std::make_shared<Graph>(g)), force);
}

// alpha <= (number of eigenvalues >= 0), for any Hermitian weighting of
// the graph. Returns that count at threshold tau.
inline int inertia_upper_bound(const HermitianWeighting& w, double tau = -1.0) {
    return inertia(compute_spectrum(w), tau).nonneg();
}

inline int inertia_upper_bound(const Graph& g, double tau = -1.0) {
    return inertia_upper_bound(HermitianWeighting::unweighted(std::make_shared<Graph>(g)), tau);
}

// Fourth-moment upper bound on P(X > 0): for mean m1, second moment m2,
// fourth moment m4 and any threshold y > 0,
//   P(X > 0) <= 1 - (4/9)(2 sqrt(3) - 3)(-2 m1 / y + 3 m2 / y^2 - m4 / y^4),
// clamped into [0, 1].
inline double hzz_upper(double m1, double m2, double m4, double y) {
    if (!(y > 0.0)) throw std::invalid_argument("hzz_upper: y must be positive");
    if (m2 < 0.0 || m4 < 0.0) throw std::invalid_argument("hzz_upper: negative even moment");
    if (m4 < m2 * m2 - 1e-9)
        throw std::invalid_argument("hzz_upper: moment-inconsistent input (m4 < m2^2)");
    double inner = -2.0 * m1 / y + 3.0 * m2 / (y * y) - m4 / (y * y * y * y);
    double v = 1.0 - (4.0 / 9.0) * (2.0 * std::numbers::sqrt3 - 3.0) * inner;
    return std::clamp(v, 0.0, 1.0);
}

// Mean-shifted second/fourth moment lower bound on P(X > a) for a
// unit-variance law: 1 / (2 sqrt(m4) (sqrt(m4) - a)).
inline double zelen_lower(double m4, double a) {
    if (!(m4 >= 1.0))
        throw std::invalid_argument("zelen_lower: need m4 >= 1 (unit variance), got " +
                                    std::to_string(m4));
    double s = std::sqrt(m4);
    if (!(std::abs(a) < s))
        throw std::invalid_argument("zelen_lower: need |a| < sqrt(m4)");
    return 1.0 / (2.0 * s * (s - a));
}

// Best available lower bound on P(X > 0) for a mean-zero, unit-variance
// law from its third and fourth moments. The (2 sqrt(3) - 3)/m4 branch
// holds generally; a vanishing third moment unlocks 1/(2 m4).
inline double moment_positivity_lower(double m3, double m4) {
    if (!(m4 >= 1.0))
        throw std::invalid_argument("moment_positivity_lower: need m4 >= 1, got " +
                                    std::to_string(m4));
    double base = (2.0 * std::numbers::sqrt3 - 3.0) / m4;
    if (std::abs(m3) <= 1e-10) return std::max(base, 1.0 / (2.0 * m4));
    return base;
}

// Unit weights inside each cover block. The resulting matrix is a direct
// sum of clique adjacencies, so its nonnegative eigenvalue count is the
// number of blocks.
inline HermitianWeighting clique_cover_weighting(const Graph& g, const CliqueCover& cover) {
    if (!cover.valid_for(g))
        throw std::invalid_argument("clique_cover_weighting: cover invalid for this graph");
    auto host = std::make_shared<Graph>(g);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(g.vertex_count(), g.vertex_count());
    for (const auto& block : cover.blocks)
        for (std::size_t a = 0; a < block.size(); ++a)
            for (std::size_t b = a + 1; b < block.size(); ++b) {
                m(block[a], block[b]) = 1.0;
                m(block[b], block[a]) = 1.0;
            }
    return HermitianWeighting(std::move(host), std::move(m));
}

// Sharp weighting for disjoint unions of cliques and balanced complete
// bipartite graphs: cliques get unit weights (one nonnegative eigenvalue
// each), each K_{d,d} keeps only a perfect matching (d blocks with
// eigenvalues +-1, so d nonnegative ones). The total matches the
// independence number of such a union exactly.
inline HermitianWeighting bipartite_block_weighting(const Graph& g) {
    auto host = std::make_shared<Graph>(g);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(g.vertex_count(), g.vertex_count());
    for (const auto& comp : g.connected_components()) {
        const std::size_t k = comp.size();
        bool clique = true;
        for (std::size_t a = 0; a < k && clique; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                if (!g.has_edge(comp[a], comp[b])) {
                    clique = false;
                    break;
                }
        if (clique) {
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = a + 1; b < k; ++b) {
                    m(comp[a], comp[b]) = 1.0;
                    m(comp[b], comp[a]) = 1.0;
                }
            continue;
        }
        // Two-color; comp is connected so the coloring is forced.
        std::vector<int> color(k, -1);
        std::vector<std::size_t> index(static_cast<std::size_t>(g.vertex_count()), k);
        for (std::size_t a = 0; a < k; ++a) index[static_cast<std::size_t>(comp[a])] = a;
        std::vector<std::size_t> queue{0};
        color[0] = 0;
        bool bipartite = true;
        for (std::size_t head = 0; head < queue.size() && bipartite; ++head) {
            std::size_t a = queue[head];
            for (int u : g.neighbors(comp[a])) {
                std::size_t b = index[static_cast<std::size_t>(u)];
                if (color[b] == -1) {
                    color[b] = 1 - color[a];
                    queue.push_back(b);
                } else if (color[b] == color[a]) {
                    bipartite = false;
                    break;
                }
            }
        }
        std::vector<int> side0, side1;
        for (std::size_t a = 0; a < k; ++a) (color[a] == 0 ? side0 : side1).push_back(comp[a]);
        bool complete = bipartite && side0.size() == side1.size();
        if (complete)
            for (int u : side0)
                for (int v : side1)
                    if (!g.has_edge(u, v)) {
                        complete = false;
                        break;
                    }
        if (!complete)
            throw std::invalid_argument(
                "bipartite_block_weighting: component containing vertex " +
                std::to_string(comp[0]) +
                " is neither a clique nor a balanced complete bipartite graph");
        for (std::size_t a = 0; a < side0.size(); ++a) {
            m(side0[a], side1[a]) = 1.0;
            m(side1[a], side0[a]) = 1.0;
        }
    }
    return HermitianWeighting(std::move(host), std::move(m));
}

}  // namespace specbound

#endif
