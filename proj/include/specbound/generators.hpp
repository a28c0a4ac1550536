#ifndef SPECBOUND_GENERATORS_HPP
#define SPECBOUND_GENERATORS_HPP

#include <array>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "specbound/graph.hpp"
#include "specbound/rng.hpp"

namespace specbound {

inline bool is_prime(long long q) {
    if (q < 2) return false;
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

// Paley graph on F_q: i ~ j iff i - j is a nonzero quadratic residue.
// Needs q prime and q = 1 (mod 4) so that the residue relation is symmetric.
inline Graph gen_paley(int q) {
    if (!is_prime(q)) throw std::invalid_argument("gen_paley: q must be prime");
    if (q % 4 != 1) throw std::invalid_argument("gen_paley: q must be 1 mod 4");
    std::vector<char> residue(static_cast<std::size_t>(q), 0);
    for (long long x = 1; x < q; ++x)
        residue[static_cast<std::size_t>((x * x) % q)] = 1;
    Graph g(q);
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            if (residue[static_cast<std::size_t>((j - i) % q)]) g.add_edge(i, j);
    return g;
}

// Polarity graph of PG(2, q): vertices are projective points (nonzero triples
// over F_q up to scaling), x ~ y iff x.y = 0 and x != y. Has q^2+q+1 vertices,
// q+1 absolute points (x.x = 0) of degree q, all other degrees q+1, and no C4.
inline Graph gen_polarity(int q) {
    if (!is_prime(q)) throw std::invalid_argument("gen_polarity: q must be prime");
    // Canonical representatives: (1,a,b), then (0,1,b), then (0,0,1).
    std::vector<std::array<int, 3>> pts;
    pts.reserve(static_cast<std::size_t>(q) * q + q + 1);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) pts.push_back({1, a, b});
    for (int b = 0; b < q; ++b) pts.push_back({0, 1, b});
    pts.push_back({0, 0, 1});

    const int n = static_cast<int>(pts.size());
    Graph g(n);
    auto dot = [q](const std::array<int, 3>& x, const std::array<int, 3>& y) {
        long long s = 0;
        for (int k = 0; k < 3; ++k) s += static_cast<long long>(x[k]) * y[k];
        return static_cast<int>(s % q);
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dot(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]) == 0)
                g.add_edge(i, j);
    return g;
}

// Binomial random graph: each pair is an edge independently with probability p.
inline Graph gen_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("gen_gnp: negative n");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_gnp: p outside [0,1]");
    std::mt19937_64 g(seed);
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng::uniform01(g) < p) out.add_edge(u, v);
    return out;
}

inline Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("gen_cycle: need n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph gen_complete(int n) {
    if (n < 1) throw std::invalid_argument("gen_complete: need n >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph gen_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("gen_complete_bipartite: need sizes >= 1");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

// Petersen graph as the Kneser graph K(5,2): vertices are 2-subsets of
// {0..4} in lexicographic order, adjacent iff disjoint.
inline Graph gen_petersen() {
    std::vector<std::pair<int, int>> subsets;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) subsets.emplace_back(i, j);
    Graph g(10);
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) {
            auto [a, b] = subsets[static_cast<std::size_t>(u)];
            auto [c, d] = subsets[static_cast<std::size_t>(v)];
            if (a != c && a != d && b != c && b != d) g.add_edge(u, v);
        }
    return g;
}

// K_{d,d} together with d disjoint copies of K_{d+1}; d-regular on
// n = 2d + d(d+1) vertices.
inline Graph gen_remark(int d) {
    if (d < 1) throw std::invalid_argument("gen_remark: need d >= 1");
    std::vector<Graph> parts;
    parts.push_back(gen_complete_bipartite(d, d));
    for (int i = 0; i < d; ++i) parts.push_back(gen_complete(d + 1));
    return disjoint_union(parts);
}

}  // namespace specbound

#endif
