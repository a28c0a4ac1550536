#ifndef SPECBOUND_WALKS_HPP
#define SPECBOUND_WALKS_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "specbound/graph.hpp"
#include "specbound/weighting.hpp"

namespace specbound {

// tr(A^k) for k in {2,3,4} straight from the host combinatorics, no
// eigensolve. k=2 sums squared edge weights, k=3 runs over triangles,
// and k=4 uses the closed-walk classification that is only exhaustive
// when the host has no 4-cycle, hence the guard.
inline double trace_power_walks(const HermitianWeighting& w, int k) {
    const Graph& g = w.host();
    const int n = w.n();

    if (k == 2) {
        double s = 0.0;
        for (auto [u, v] : g.edges()) s += std::norm(w.entry(u, v));
        return 2.0 * s;
    }

    if (k == 3) {
        // Each triangle {i<j<l} carries 6 closed walks; conjugate pairs
        // collapse to a real part.
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            const auto& ni = g.neighbors(i);
            for (std::size_t a = 0; a < ni.size(); ++a) {
                int j = ni[a];
                if (j <= i) continue;
                for (std::size_t b = a + 1; b < ni.size(); ++b) {
                    int l = ni[b];
                    if (!g.has_edge(j, l)) continue;
                    s += (w.entry(i, j) * w.entry(j, l) * w.entry(l, i)).real();
                }
            }
        }
        return 6.0 * s;
    }

    if (k == 4) {
        if (auto c4 = find_c4(g)) {
            auto& c = *c4;
            throw std::invalid_argument(
                "trace_power_walks: k=4 needs a host with no 4-cycle, found (" +
                std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) +
                "," + std::to_string(c[3]) + ")");
        }
        // Without 4-cycles every closed 4-walk backtracks through a center:
        // tr(A^4) = 2*sum_i (sum_j |A_ij|^2)^2 - sum_{i,j} |A_ij|^4.
        double total = 0.0;
        double quart = 0.0;
        for (int i = 0; i < n; ++i) {
            double r = 0.0;
            for (int j : g.neighbors(i)) {
                double q = std::norm(w.entry(i, j));
                r += q;
                quart += q * q;
            }
            total += r * r;
        }
        return 2.0 * total - quart;
    }

    throw std::invalid_argument("trace_power_walks: k must be 2, 3, or 4");
}

}  // namespace specbound

#endif
